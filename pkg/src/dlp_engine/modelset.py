# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Tuple

from pymodaq_utils.enums import BaseEnum, enum_checker

from dlp_engine.interp import Interpretation


class SemanticsId(BaseEnum):
    """Semantics handled by the engine, values are the command line tags"""
    SM = 'sm'
    WS_SINGLE = 'ws'
    RD = 'rd'
    WS = 'ws-dlp'
    ERD = 'erd'
    EWS = 'ews'
    RD_EXPONE = 'rd+expone'
    RD_EXPTWO = 'rd+exptwo'
    WS_EXPONE = 'ws+expone'
    WS_EXPTWO = 'ws+exptwo'

    def __hash__(self):
        return hash(self.name)

    @classmethod
    def from_tag(cls, tag) -> 'SemanticsId':
        """Get the semantics from its command line tag, its name or the enum itself"""
        if isinstance(tag, str):
            for sem in cls:
                if sem.value == tag.lower():
                    return sem
        return enum_checker(cls, tag)

    @classmethod
    def tags(cls) -> List[str]:
        return [sem.value for sem in cls]

    @property
    def tag(self) -> str:
        return self.value

    @property
    def single_program(self) -> bool:
        """Semantics of a single program, applied to DLPs with exactly one component"""
        return self in (SemanticsId.SM, SemanticsId.WS_SINGLE)

    @property
    def requires_generalised(self) -> bool:
        return self in (SemanticsId.RD, SemanticsId.WS)

    @property
    def transformation(self) -> Optional[str]:
        """Name of the transformation applied before RD or WS, if any"""
        if '+' in self.value:
            return self.value.split('+')[1]
        return None

    @property
    def base(self) -> 'SemanticsId':
        """RD or WS for the composed semantics, the semantics itself otherwise"""
        if self.transformation is None:
            return self
        return SemanticsId.RD if self.value.startswith('rd') else SemanticsId.WS

    @property
    def is_extended(self) -> bool:
        return self in (SemanticsId.ERD, SemanticsId.EWS)


@dataclass(frozen=True)
class ModelSet:
    """Sorted collection of the models computed by a semantics

    Two model sets are equal when they hold the same models, whatever semantics produced them.
    """
    models: Tuple[Interpretation, ...] = ()
    semantics: Optional[SemanticsId] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, 'models', tuple(sorted(set(self.models), key=str)))

    @classmethod
    def from_strings(cls, texts: Iterable[str], semantics: Optional[SemanticsId] = None) -> 'ModelSet':
        return cls(tuple(Interpretation.parse(text) for text in texts), semantics)

    def __iter__(self) -> Iterator[Interpretation]:
        return iter(self.models)

    def __len__(self):
        return len(self.models)

    def __contains__(self, item: Interpretation) -> bool:
        return item in self.models

    def __str__(self):
        return '\n'.join(str(model) for model in self.models)

    def to_strings(self) -> List[str]:
        return [str(model) for model in self.models]

    def to_dict(self) -> dict:
        return dict(semantics=self.semantics.tag if self.semantics is not None else None,
                    models=[model.to_strings() for model in self.models],
                    count=len(self.models))
