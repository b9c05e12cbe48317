# ============================================
# app/cli.py - 명령줄 도구
# ============================================
# 사용법: python -m app <명령> [옵션]
#
# 명령 목록
#   strip      디아크리틱 제거
#   stats      문자/부호 수와 커버리지
#   eval-asr   ASR 전사 평가 (WER/CER/커버리지/precision)
#   eval-diac  텍스트 복원기 평가 (커버리지/DER)
#   train      lexicon 복원기 학습
#   restore    lexicon 복원기로 디아크리틱 복원
#   pipeline   UD+lexicon (또는 --ad 이면 AD:lexicon) 파이프라인 평가
#   compare    여러 가설 파일을 한 표로 비교
#
# 종료 코드: 0 성공, 1 사용법 오류, 2 데이터 오류
# ============================================

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from app import __version__
from app.config import settings
from app.core.exceptions import TashkeelEvalException, UsageException
from app.core.log_config import configure_logging
from app.schemas.record import EvalRecord
from app.schemas.report import ConditionLabel
from app.schemas.run_config import CaseEnding, ReportFormat, RunConfig
from app.services.evaluation_service import EvaluationService, PipelineMode
from app.tashkeel import restorer
from app.tashkeel.corpusio import (
    emit_report,
    emit_table,
    load_jsonl,
    load_parallel,
    read_lines,
)
from app.tashkeel.orthography import CoverageMode, ParsePolicy

logger = logging.getLogger(__name__)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse 오류를 UsageException(종료 코드 1)으로 바꿉니다."""

    def error(self, message: str):
        raise UsageException(f"{self.prog}: {message}")


# ============================================
# 인자 파서
# ============================================

def _common_options() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--format", dest="report_format", choices=[f.value for f in ReportFormat],
                        default=None, help="리포트 형식 (기본: DEFAULT_REPORT_FORMAT)")
    policy = common.add_mutually_exclusive_group()
    policy.add_argument("--strict", dest="parse_policy", action="store_const", const=ParsePolicy.STRICT.value,
                        help="잘못된 디아크리틱 배치가 있으면 중단 (기본)")
    policy.add_argument("--lenient", dest="parse_policy", action="store_const", const=ParsePolicy.LENIENT.value,
                        help="잘못된 부호를 보정하고 경고 로그")
    common.add_argument("--coverage-mode", choices=[m.value for m in CoverageMode], default=None)
    common.add_argument("--case-ending", choices=[c.value for c in CaseEnding], default=None,
                        help="precision/DER 어미 포함 여부")
    common.add_argument("--jobs", type=int, default=None, help="워커 프로세스 수")
    common.add_argument("-o", "--output", type=Path, default=None, help="출력 파일 (기본: 표준 출력)")
    return common


def build_parser() -> argparse.ArgumentParser:
    """
    명령줄 파서를 만듭니다.

    [신입 개발자를 위한 팁]
    - 공통 옵션은 parents로 모든 하위 명령에 붙입니다
    - 기본값(None)은 나중에 settings 값으로 채웁니다 (CLI > 환경 변수 > 기본값)
    """
    common = _common_options()
    parser = _ArgumentParser(prog="python -m app", description="아랍어 디아크리틱 인식 평가 도구")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    strip_cmd = commands.add_parser("strip", parents=[common], help="디아크리틱 제거")
    strip_cmd.add_argument("input", type=Path)

    stats_cmd = commands.add_parser("stats", parents=[common], help="문자/부호 수와 커버리지")
    stats_cmd.add_argument("input", type=Path)

    asr_cmd = commands.add_parser("eval-asr", parents=[common], help="ASR 전사 평가")
    asr_cmd.add_argument("ref", type=Path)
    asr_cmd.add_argument("hyp", type=Path, nargs="?")
    asr_cmd.add_argument("--jsonl", action="store_true", help="REF가 hyp 필드를 가진 JSONL 코퍼스")
    asr_cmd.add_argument("--condition", choices=[c.value for c in ConditionLabel], default=ConditionLabel.OTHER.value)
    asr_cmd.add_argument("--tag", default=None, help="표에 표시할 파이프라인 이름")
    asr_cmd.add_argument("--diacritics-only", action="store_true", help="커버리지/precision만 표시")

    diac_cmd = commands.add_parser("eval-diac", parents=[common], help="텍스트 복원기 평가")
    diac_cmd.add_argument("gold", type=Path)
    diac_cmd.add_argument("pred", type=Path, nargs="?")
    diac_cmd.add_argument("--jsonl", action="store_true", help="GOLD가 hyp(예측) 필드를 가진 JSONL 코퍼스")
    diac_cmd.add_argument("--label", default="predicted", help="표에 표시할 모델 이름")

    train_cmd = commands.add_parser("train", parents=[common], help="lexicon 복원기 학습")
    train_cmd.add_argument("corpus", type=Path)
    train_cmd.add_argument("model_out", type=Path)

    restore_cmd = commands.add_parser("restore", parents=[common], help="디아크리틱 복원")
    restore_cmd.add_argument("model", type=Path)
    restore_cmd.add_argument("input", type=Path)

    pipeline_cmd = commands.add_parser("pipeline", parents=[common], help="lexicon 파이프라인 평가")
    pipeline_cmd.add_argument("ref", type=Path)
    pipeline_cmd.add_argument("hyp", type=Path)
    pipeline_cmd.add_argument("model", type=Path)
    pipeline_cmd.add_argument("--ad", action="store_true", help="참조를 strip → restore (AD:lexicon)")
    pipeline_cmd.add_argument("--diacritics-only", action="store_true")

    compare_cmd = commands.add_parser("compare", parents=[common], help="여러 시스템 비교 표")
    compare_cmd.add_argument("ref", type=Path)
    compare_cmd.add_argument("systems", nargs="+", metavar="LABEL=HYP")
    compare_cmd.add_argument("--diacritics-only", action="store_true")

    return parser


# ============================================
# 실행 설정
# ============================================

def _parse_systems(items: Sequence[str]) -> List[Tuple[str, Path]]:
    systems = []
    for item in items:
        label, sep, path = item.partition("=")
        if not sep or not label or not path:
            raise UsageException(f"LABEL=HYP 형식이 아닙니다: {item}")
        systems.append((label, Path(path)))
    return systems


def _input_paths(args: argparse.Namespace) -> List[Path]:
    command = args.command
    if command in ("strip", "stats"):
        return [args.input]
    if command == "eval-asr":
        if args.jsonl:
            if args.hyp is not None:
                raise UsageException("--jsonl 을 쓰면 HYP 파일을 주지 않습니다")
            return [args.ref]
        if args.hyp is None:
            raise UsageException("HYP 파일이 필요합니다 (또는 --jsonl)")
        return [args.ref, args.hyp]
    if command == "eval-diac":
        if args.jsonl:
            if args.pred is not None:
                raise UsageException("--jsonl 을 쓰면 PRED 파일을 주지 않습니다")
            return [args.gold]
        if args.pred is None:
            raise UsageException("PRED 파일이 필요합니다 (또는 --jsonl)")
        return [args.gold, args.pred]
    if command == "train":
        return [args.corpus]
    if command == "restore":
        return [args.model, args.input]
    if command == "pipeline":
        return [args.ref, args.hyp, args.model]
    if command == "compare":
        return [args.ref] + [path for _, path in _parse_systems(args.systems)]
    raise UsageException(f"알 수 없는 명령: {command}")


def build_run_config(args: argparse.Namespace) -> RunConfig:
    """CLI 인자와 settings를 합쳐 RunConfig를 만듭니다."""
    jobs = args.jobs if args.jobs is not None else settings.DEFAULT_JOBS
    if jobs < 1:
        raise UsageException("--jobs 는 1 이상이어야 합니다")
    try:
        return RunConfig(
            subcommand=args.command,
            input_paths=_input_paths(args),
            output_path=args.output,
            parse_policy=args.parse_policy or settings.DEFAULT_PARSE_POLICY,
            coverage_mode=args.coverage_mode or settings.DEFAULT_COVERAGE_MODE,
            case_ending=args.case_ending or settings.DEFAULT_CASE_ENDING,
            report_format=args.report_format or settings.DEFAULT_REPORT_FORMAT,
            jobs=jobs,
        )
    except ValueError as exc:
        # 잘못된 .env 값 (pydantic ValidationError)
        raise UsageException(f"잘못된 설정 값: {exc}") from exc


def _service(config: RunConfig) -> EvaluationService:
    return EvaluationService(config.parse_policy, config.coverage_mode, config.jobs)


def _write(config: RunConfig, data: bytes) -> None:
    if config.output_path is not None:
        config.output_path.write_bytes(data)
        logger.info(f"💾 출력 저장: {config.output_path}")
        return
    sys.stdout.flush()
    sys.stdout.buffer.write(data)
    sys.stdout.buffer.flush()


def _lines_bytes(lines: Sequence[str]) -> bytes:
    if not lines:
        return b""
    return ("\n".join(lines) + "\n").encode("utf-8")


def _load_model(path: Path) -> restorer.LexiconModel:
    return restorer.load(path.read_bytes())


# ============================================
# 명령
# ============================================

def cmd_strip(config: RunConfig, args: argparse.Namespace) -> None:
    lines = read_lines(args.input)
    _write(config, _lines_bytes(_service(config).strip_lines(lines)))


def cmd_stats(config: RunConfig, args: argparse.Namespace) -> None:
    stats = _service(config).stats(read_lines(args.input))
    if config.report_format is ReportFormat.JSON:
        payload = json.dumps(stats.model_dump(), sort_keys=True, ensure_ascii=False, indent=2) + "\n"
        _write(config, payload.encode("utf-8"))
        return
    text = (
        f"letters\t{stats.letters}\n"
        f"marks\t{stats.marks}\n"
        f"marked_letters\t{stats.marked_letters}\n"
        f"coverage\t{stats.coverage * 100:.2f}%\n"
        f"words\t{stats.words}\n"
    )
    _write(config, text.encode("utf-8"))


def _asr_records(args: argparse.Namespace) -> List[EvalRecord]:
    if args.jsonl:
        return load_jsonl(args.ref)
    return load_parallel(args.ref, args.hyp)


def cmd_eval_asr(config: RunConfig, args: argparse.Namespace) -> None:
    report = _service(config).evaluate_asr_records(
        _asr_records(args), ConditionLabel(args.condition), args.tag
    )
    _write(config, emit_report(report, config.report_format, config.case_ending, args.diacritics_only))


def cmd_eval_diac(config: RunConfig, args: argparse.Namespace) -> None:
    records = load_jsonl(args.gold) if args.jsonl else load_parallel(args.gold, args.pred)
    report = _service(config).evaluate_diacritizer_records(records, args.label)
    _write(config, emit_report(report, config.report_format, config.case_ending))


def cmd_train(config: RunConfig, args: argparse.Namespace) -> None:
    model = _service(config).train_lexicon(read_lines(args.corpus))
    args.model_out.write_bytes(restorer.save(model))
    logger.info(f"💾 lexicon 모델 저장: {args.model_out}")


def cmd_restore(config: RunConfig, args: argparse.Namespace) -> None:
    model = _load_model(args.model)
    lines = _service(config).restore_lines(model, read_lines(args.input))
    _write(config, _lines_bytes(lines))


def cmd_pipeline(config: RunConfig, args: argparse.Namespace) -> None:
    model = _load_model(args.model)
    mode = PipelineMode.AD if args.ad else PipelineMode.UD
    report = _service(config).run_pipeline(load_parallel(args.ref, args.hyp), model, mode)
    _write(config, emit_report(report, config.report_format, config.case_ending, args.diacritics_only))


def cmd_compare(config: RunConfig, args: argparse.Namespace) -> None:
    labeled = [(label, load_parallel(args.ref, path)) for label, path in _parse_systems(args.systems)]
    reports = _service(config).compare(labeled)
    _write(config, emit_table(reports, config.report_format, config.case_ending, args.diacritics_only))


COMMANDS: Dict[str, Callable[[RunConfig, argparse.Namespace], None]] = {
    "strip": cmd_strip,
    "stats": cmd_stats,
    "eval-asr": cmd_eval_asr,
    "eval-diac": cmd_eval_diac,
    "train": cmd_train,
    "restore": cmd_restore,
    "pipeline": cmd_pipeline,
    "compare": cmd_compare,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    CLI 진입점

    Args:
        argv: 명령줄 인자 (None이면 sys.argv[1:])

    Returns:
        int: 종료 코드 (0 성공, 1 사용법 오류, 2 데이터 오류)
    """
    configure_logging(settings.TASHKEEL_EVAL_LOG)
    try:
        args = build_parser().parse_args(argv)
        config = build_run_config(args)
        config.validate_paths()
        try:
            COMMANDS[args.command](config, args)
        except OSError as exc:
            # 읽기/쓰기 불가 경로, 없는 출력 디렉터리 등
            raise UsageException(f"파일 입출력 실패: {exc.filename or ''} ({exc.strerror or exc})") from exc
        return 0
    except TashkeelEvalException as exc:
        print(f"error: [{exc.error_code}] {exc.message}", file=sys.stderr)
        return exc.exit_code
