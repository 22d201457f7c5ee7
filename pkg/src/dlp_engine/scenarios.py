# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Worked update scenarios, in the program text format. They serve as built-in inputs of the ``properties``
command and as fixtures of the test suite.
"""
from typing import Dict, List, Tuple

from dlp_engine.parser import parse_dlp, parse_program
from dlp_engine.syntax import DLP, Program

DAY_NIGHT = """\
day :- not night.
night :- not day.
stars :- night, not cloudy.
not stars.
"""

IRRELEVANT_UPDATE = DAY_NIGHT + """\
#update.
stars :- stars.
"""

VENUS_UPDATE = DAY_NIGHT + """\
#update.
stars :- venus.
venus :- stars.
"""

RAILWAY = """\
cross :- -train.
wait :- train.
listen :- not train, not -train.
"""

RAILWAY_TRAIN = RAILWAY + """\
#update.
train.
"""

RAILWAY_RESET = RAILWAY_TRAIN + """\
#update.
not train.
"""

FAULTY_SENSOR = """\
p.
-p.
#update.
not p.
"""

EMPTY_UPDATE = """\
p.
-p.
#update.
"""

STRATIFIED = """\
p :- q, not r.
not p :- s.
q.
s :- q.
#update.
-p.
r :- q.
-r :- q, s.
#update.
not r.
"""

FACT_UPDATE = """\
p.
#update.
-p.
"""

SCENARIOS: Dict[str, str] = {
    'irrelevant-update': IRRELEVANT_UPDATE,
    'venus-update': VENUS_UPDATE,
    'railway': RAILWAY,
    'railway-train': RAILWAY_TRAIN,
    'railway-reset': RAILWAY_RESET,
    'faulty-sensor': FAULTY_SENSOR,
    'empty-update': EMPTY_UPDATE,
    'stratified': STRATIFIED,
    'fact-update': FACT_UPDATE,
}


def load(name: str) -> DLP:
    """Parsed DLP of a named scenario"""
    try:
        return parse_dlp(SCENARIOS[name])
    except KeyError:
        raise KeyError(f'Unknown scenario {name}, possible values are {list(SCENARIOS)}') from None


def builtin_cases(property_name: str) -> List[Tuple]:
    """Inputs of a property drawn from the scenarios"""
    day_night = parse_program(DAY_NIGHT)
    railway = parse_program(RAILWAY)
    cases = {
        'generalisation': [(day_night,), (railway,), (parse_program('p.\n-p.'),)],
        'idempotence': [(day_night,), (railway,)],
        'absorption': [(day_night, parse_program('stars :- stars.')), (railway, parse_program('train.'))],
        'augmentation': [(railway, parse_program('train.'), parse_program('train.\nnot train :- -train.'))],
        'non-interference': [(day_night, parse_program('cloudy.'), parse_program('train.'))],
        'fact-update': [(load('fact-update'),), (parse_dlp('p.\nnot q.\n#update.\n-p.\nq.'),)],
        'empty-update': [(load('empty-update'),)],
        'tautologies': [(DLP((day_night, Program())), DLP((Program(), parse_program('stars :- stars.'))))],
        'early-recovery': [(parse_program('p.\n-p.'), parse_program('not p.'))],
        'generalised-early-recovery': [(load('stratified'),), (load('faulty-sensor'),)],
    }
    every_dlp = [(load(name),) for name in SCENARIOS]
    for name in ('primacy', 'support', 'causal-rejection'):
        cases[name] = every_dlp
    return cases.get(property_name, [])
