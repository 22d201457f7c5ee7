# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
from dataclasses import dataclass, field
from typing import Any, Optional, Tuple

from dlp_engine.modelset import SemanticsId
from dlp_engine.syntax import DLPError


class ShapeError(DLPError):
    """Inputs not of the shape a property expects"""
    pass


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a property on given inputs

    A failing report carries a witness: the counterexample interpretation, the failing model set or the pair of
    differing model sets. Reports of instances outside the property hypotheses are not applicable and hold
    vacuously.
    """
    property_name: str
    semantics: SemanticsId
    inputs: Tuple[Any, ...]
    holds: bool
    witness: Optional[Any] = None
    applicable: bool = True
    expected_failure: bool = False
    note: str = ''

    def __post_init__(self):
        if self.holds and self.witness is not None:
            raise ValueError('A holding property carries no witness')
        if not self.holds and self.witness is None:
            raise ValueError('A failing property needs a witness')

    @classmethod
    def not_applicable(cls, property_name: str, semantics: SemanticsId, inputs: Tuple[Any, ...],
                       note: str) -> 'PropertyReport':
        return cls(property_name, semantics, inputs, True, applicable=False, note=note)

    @property
    def status(self) -> str:
        if not self.applicable:
            return 'not applicable'
        if self.holds:
            return 'holds'
        return 'expected failure' if self.expected_failure else 'fails'

    def __str__(self):
        text = f'{self.property_name} [{self.semantics.tag}]: {self.status}'
        if self.note:
            text += f' ({self.note})'
        if self.witness is not None:
            text += f'\n  witness: {render_witness(self.witness)}'
        return text


def render_witness(witness: Any) -> str:
    if isinstance(witness, tuple):
        return ' vs '.join(render_witness(item) for item in witness)
    text = str(witness)
    if '\n' in text or text == '':
        return '{' + ', '.join(text.splitlines()) + '}'
    return text


@dataclass
class SuiteSummary:
    """Counts of a property checked over many instances"""
    property_name: str
    semantics: SemanticsId
    passed: int = 0
    failed: int = 0
    not_applicable: int = 0
    expected_failure: bool = False
    first_counterexample: Optional[PropertyReport] = field(default=None, repr=False)

    def add(self, report: PropertyReport):
        if not report.applicable:
            self.not_applicable += 1
        elif report.holds:
            self.passed += 1
        else:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = report

    @property
    def total(self) -> int:
        return self.passed + self.failed

    @property
    def status(self) -> str:
        if self.failed == 0:
            return 'pass'
        return 'expected failure' if self.expected_failure else 'FAIL'

    @property
    def ok(self) -> bool:
        return self.failed == 0 or self.expected_failure

    def to_dict(self) -> dict:
        return dict(property=self.property_name, semantics=self.semantics.tag, passed=self.passed,
                    failed=self.failed, not_applicable=self.not_applicable, status=self.status,
                    counterexample=str(self.first_counterexample) if self.first_counterexample else None)
