"""
아랍어 디아크리틱(타시킬) 평가 엔진

- orthography: 정규화 / 분해 / 렌더링 / 디아크리틱 제거
- alignment: 편집 거리와 일치 단어 쌍
- metrics: WER, CER, 커버리지, precision, DER
- restorer: lexicon 다수결 복원기
- corpusio: 코퍼스 읽기와 리포트 출력
- buckwalter: 테스트용 음역 변환

모든 연산은 불변 값에 대한 순수 함수라 동시에 호출해도 안전합니다.
"""
