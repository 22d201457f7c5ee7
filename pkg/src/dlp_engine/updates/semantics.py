# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers
"""
from abc import ABCMeta, abstractmethod
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Tuple, Union

from pymodaq_utils.factory import ObjectFactory
from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.interp import Interpretation, LiteralValuation, enumerate_interpretations
from dlp_engine.modelset import ModelSet, SemanticsId
from dlp_engine.single import LevelMapping, find_level_mapping, is_stable_model
from dlp_engine.syntax import Alphabet, DLP, Program
from dlp_engine.updates import evaluators
from dlp_engine.updates.rejection import (PreconditionError, RejectionSet, check_generalised, def_constrained,
                                          rej_rd, rej_rds, rej_ws, rej_wss, valuation_of)
from dlp_engine.updates.transformations import transform
from dlp_engine.utils import get_enumeration_limit

logger = set_logger(get_module_name(__file__))


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking a candidate interpretation against a semantics"""
    semantics: SemanticsId
    candidate: Interpretation
    accepted: bool
    rejected: Optional[RejectionSet] = None
    defaults: Optional[Program] = None
    level_mapping: Optional[LevelMapping] = None
    trace: Tuple[LiteralValuation, ...] = field(default_factory=tuple)

    def render(self, trace: bool = False) -> str:
        lines = [f'semantics: {self.semantics.tag}',
                 f'candidate: {self.candidate}']
        if self.rejected is not None:
            lines.append(f'rejected: {self.rejected}')
        if self.defaults is not None:
            lines.append(f"defaults: {{{', '.join(f'({rule})' for rule in self.defaults)}}}")
        if self.level_mapping is not None:
            lines.append(f'levels: {self.level_mapping}')
        if trace:
            for index, iterate in enumerate(self.trace):
                lines.append(f'T^{index}: {iterate}')
        lines.append(f"model: {'yes' if self.accepted else 'no'}")
        return '\n'.join(lines)


class SemanticsBase(metaclass=ABCMeta):
    """Model computation of one semantics by enumeration of the candidate interpretations"""

    semantics: SemanticsId = None

    def prepare(self, dlp: DLP, alphabet: Optional[Alphabet] = None) -> DLP:
        """Check the preconditions and return the DLP to evaluate"""
        return dlp

    def alphabet(self, dlp: DLP, alphabet: Optional[Alphabet] = None) -> Alphabet:
        return evaluators.full_alphabet(dlp, alphabet)

    @abstractmethod
    def accepts(self, dlp: DLP, interpretation: Interpretation, alphabet: Alphabet) -> bool:
        """Membership test of a prepared DLP"""
        ...

    @abstractmethod
    def verdict(self, dlp: DLP, interpretation: Interpretation, alphabet: Alphabet) -> Verdict:
        ...

    def models(self, dlp: DLP, alphabet: Optional[Alphabet] = None, limit: Optional[int] = None) -> ModelSet:
        dlp = self.prepare(dlp, alphabet)
        alphabet = self.alphabet(dlp, alphabet)
        models = tuple(interpretation for interpretation in enumerate_interpretations(alphabet, limit)
                       if self.accepts(dlp, interpretation, alphabet))
        logger.debug(f'{self.semantics.tag}: {len(models)} model(s) over {len(alphabet)} atoms')
        return ModelSet(models, self.semantics)

    def check(self, dlp: DLP, interpretation: Interpretation, alphabet: Optional[Alphabet] = None) -> Verdict:
        alphabet = interpretation.atoms if alphabet is None else alphabet | interpretation.atoms
        dlp = self.prepare(dlp, alphabet)
        return self.verdict(dlp, interpretation, self.alphabet(dlp, alphabet))


class SemanticsFactory(ObjectFactory):
    def get(self, semantics: Union[SemanticsId, str], **kwargs) -> SemanticsBase:
        return self.create(SemanticsId.from_tag(semantics).tag, **kwargs)

    @property
    def semantics(self) -> List[str]:
        """Get the list of the registered semantics tags"""
        return self.keys_function(do_sort=False)


class SingleProgramSemantics(SemanticsBase):

    def prepare(self, dlp: DLP, alphabet: Optional[Alphabet] = None) -> DLP:
        if len(dlp) != 1:
            raise PreconditionError(f'The {self.semantics.tag} semantics applies to a single program, '
                                    f'got a DLP with {len(dlp)} components')
        return dlp


@SemanticsFactory.register('sm')
class StableSemantics(SingleProgramSemantics):
    semantics = SemanticsId.SM

    def accepts(self, dlp, interpretation, alphabet):
        return is_stable_model(dlp[0], interpretation, alphabet)

    def verdict(self, dlp, interpretation, alphabet):
        return Verdict(self.semantics, interpretation, self.accepts(dlp, interpretation, alphabet))


@SemanticsFactory.register('ws')
class WellSupportedSemantics(SingleProgramSemantics):
    semantics = SemanticsId.WS_SINGLE

    def accepts(self, dlp, interpretation, alphabet):
        return find_level_mapping(dlp[0], interpretation, alphabet) is not None

    def verdict(self, dlp, interpretation, alphabet):
        mapping = find_level_mapping(dlp[0], interpretation, alphabet)
        return Verdict(self.semantics, interpretation, mapping is not None, level_mapping=mapping)


@SemanticsFactory.register('rd')
class RDSemantics(SemanticsBase):
    semantics = SemanticsId.RD
    opaque = False

    def prepare(self, dlp, alphabet=None):
        if not self.opaque:
            check_generalised(dlp, self.semantics.tag)
        return dlp

    def accepts(self, dlp, interpretation, alphabet):
        return evaluators.is_rd_model(dlp, interpretation, alphabet, self.opaque)

    def verdict(self, dlp, interpretation, alphabet):
        return Verdict(self.semantics, interpretation, self.accepts(dlp, interpretation, alphabet),
                       rejected=rej_rd(dlp, interpretation, alphabet, self.opaque),
                       defaults=def_constrained(dlp, interpretation, alphabet, self.opaque))


@SemanticsFactory.register('ws-dlp')
class WSSemantics(RDSemantics):
    semantics = SemanticsId.WS

    def accepts(self, dlp, interpretation, alphabet):
        mapping = evaluators.rd_level_mapping(dlp, interpretation, alphabet, self.opaque)
        return evaluators.is_ws_model(dlp, interpretation, mapping, alphabet, self.opaque)

    def verdict(self, dlp, interpretation, alphabet):
        mapping = evaluators.rd_level_mapping(dlp, interpretation, alphabet, self.opaque)
        return Verdict(self.semantics, interpretation,
                       evaluators.is_ws_model(dlp, interpretation, mapping, alphabet, self.opaque),
                       rejected=rej_ws(dlp, interpretation, mapping, alphabet, self.opaque),
                       level_mapping=mapping)


@SemanticsFactory.register('erd')
class ExtendedRDSemantics(SemanticsBase):
    semantics = SemanticsId.ERD

    def accepts(self, dlp, interpretation, alphabet):
        return evaluators.is_extended_rd_model(dlp, interpretation, alphabet)

    def verdict(self, dlp, interpretation, alphabet):
        return Verdict(self.semantics, interpretation, self.accepts(dlp, interpretation, alphabet),
                       rejected=rej_rds(dlp, valuation_of(dlp, interpretation, alphabet)),
                       trace=tuple(evaluators.extended_rd_trace(dlp, interpretation, alphabet)))


@SemanticsFactory.register('ews')
class ExtendedWSSemantics(SemanticsBase):
    semantics = SemanticsId.EWS

    def accepts(self, dlp, interpretation, alphabet):
        return evaluators.extended_ws_mapping(dlp, interpretation, alphabet) is not None

    def verdict(self, dlp, interpretation, alphabet):
        mapping = evaluators.extended_ws_mapping(dlp, interpretation, alphabet)
        accepted = mapping is not None
        if not accepted:
            mapping = evaluators.extended_level_mapping(dlp, interpretation, alphabet)
        return Verdict(self.semantics, interpretation, accepted,
                       rejected=rej_wss(dlp, interpretation, mapping, alphabet), level_mapping=mapping,
                       trace=tuple(evaluators.extended_rd_trace(dlp, interpretation, alphabet)))


class ComposedMixin:
    """Apply a coherence transformation, then RD or WS reading -p as an opaque atom"""
    opaque = True
    transformation: str = None

    def prepare(self, dlp, alphabet=None):
        return transform(dlp, self.transformation, alphabet)


@SemanticsFactory.register('rd+expone')
class RDExponeSemantics(ComposedMixin, RDSemantics):
    semantics = SemanticsId.RD_EXPONE
    transformation = 'expone'


@SemanticsFactory.register('rd+exptwo')
class RDExptwoSemantics(ComposedMixin, RDSemantics):
    semantics = SemanticsId.RD_EXPTWO
    transformation = 'exptwo'


@SemanticsFactory.register('ws+expone')
class WSExponeSemantics(ComposedMixin, WSSemantics):
    semantics = SemanticsId.WS_EXPONE
    transformation = 'expone'


@SemanticsFactory.register('ws+exptwo')
class WSExptwoSemantics(ComposedMixin, WSSemantics):
    semantics = SemanticsId.WS_EXPTWO
    transformation = 'exptwo'


semantics_factory = SemanticsFactory()


@lru_cache(maxsize=4096)
def _cached_models(dlp: DLP, tag: str, alphabet: Optional[Alphabet], limit: Optional[int]) -> ModelSet:
    return semantics_factory.get(tag).models(dlp, alphabet, limit)


def models(dlp: DLP, semantics: Union[SemanticsId, str], alphabet: Optional[Alphabet] = None,
           limit: Optional[int] = None) -> ModelSet:
    """Models of a DLP under the given semantics

    Parameters
    ----------
    dlp: DLP
    semantics: SemanticsId or its command line tag, for instance 'erd' or 'rd+expone'
    alphabet: Alphabet
        extra atoms to evaluate over besides the ones of the DLP
    limit: int
        enumeration limit, see `dlp_engine.utils.get_enumeration_limit`

    Raises
    ------
    PreconditionError: semantics applied outside of its domain
    EnumerationLimitError
    """
    return _cached_models(dlp, SemanticsId.from_tag(semantics).tag, alphabet, get_enumeration_limit(limit))


def check_candidate(dlp: DLP, interpretation: Interpretation, semantics: Union[SemanticsId, str],
                    alphabet: Optional[Alphabet] = None) -> Verdict:
    return semantics_factory.get(semantics).check(dlp, interpretation, alphabet)
