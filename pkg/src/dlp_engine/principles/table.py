# -*- coding: utf-8 -*-
"""
Created the 17/10/2026

@author: dlp_engine developers

Update properties as executable checks. Each property is registered in the PropertyFactory under the name used
on the command line and knows how to

* evaluate itself on given inputs for a semantics
* generate random inputs satisfying its shape conditions
* derive its inputs from a single DLP when possible
"""
from abc import ABCMeta, abstractmethod
from typing import Any, List, Optional, Sequence, Tuple, Union

import numpy as np

from pymodaq_utils.factory import ObjectFactory
from pymodaq_utils.logger import set_logger, get_module_name

from dlp_engine.interp import Interpretation, satisfies
from dlp_engine.modelset import ModelSet, SemanticsId
from dlp_engine.principles import generator as gen
from dlp_engine.principles.recovery import (check_early_recovery, check_generalised_early_recovery,
                                            is_consistent_facts)
from dlp_engine.principles.report import PropertyReport, ShapeError, SuiteSummary
from dlp_engine.syntax import DLP, Alphabet, Literal, Program, alphabet_of, con
from dlp_engine.updates.rejection import PreconditionError
from dlp_engine.updates.semantics import models

logger = set_logger(get_module_name(__file__))


def inputs_alphabet(inputs: Sequence[Any], alphabet: Optional[Alphabet] = None) -> Alphabet:
    """Union of the alphabets of programs and DLPs, both sides of a property being evaluated over it"""
    result = Alphabet() if alphabet is None else alphabet
    for item in inputs:
        if isinstance(item, (Program, DLP)):
            result = result | alphabet_of(item)
    return result


def as_program(item: Union[Program, DLP]) -> Program:
    if isinstance(item, DLP):
        if len(item) != 1:
            raise ShapeError(f'Expected a single program, got a DLP with {len(item)} components')
        return item[0]
    return item


class PropertyBase(metaclass=ABCMeta):
    """An update property checked by evaluating a semantics on derived DLPs"""
    name: str = ''
    arity: int = 1
    expected_failures: Tuple[SemanticsId, ...] = ()

    def check(self, semantics: Union[SemanticsId, str], *inputs, alphabet: Optional[Alphabet] = None) \
            -> PropertyReport:
        semantics = SemanticsId.from_tag(semantics)
        if len(inputs) != self.arity:
            raise ShapeError(f'{self.name} expects {self.arity} input(s), got {len(inputs)}')
        try:
            report = self.evaluate(semantics, *inputs, alphabet=inputs_alphabet(inputs, alphabet))
        except PreconditionError as e:
            return PropertyReport.not_applicable(self.name, semantics, tuple(inputs), str(e))
        if not report.holds and semantics in self.expected_failures:
            return PropertyReport(report.property_name, semantics, report.inputs, False, report.witness,
                                  expected_failure=True, note=report.note)
        return report

    @abstractmethod
    def evaluate(self, semantics: SemanticsId, *inputs, alphabet: Alphabet) -> PropertyReport:
        ...

    @abstractmethod
    def generate(self, rng: np.random.Generator, params: gen.GeneratorParams, strong_negation: bool) -> Tuple:
        """Random inputs of the property"""
        ...

    def from_dlp(self, dlp: DLP) -> Optional[Tuple]:
        """Inputs of the property read from a single DLP, None when its shape does not fit"""
        return None

    def compare(self, semantics: SemanticsId, inputs: Tuple, left: DLP, right: DLP,
                alphabet: Alphabet) -> PropertyReport:
        left_models = models(left, semantics, alphabet)
        right_models = models(right, semantics, alphabet)
        if left_models == right_models:
            return PropertyReport(self.name, semantics, inputs, True)
        return PropertyReport(self.name, semantics, inputs, False, witness=(left_models, right_models))

    def per_model(self, semantics: SemanticsId, inputs: Tuple, dlp: DLP, alphabet: Alphabet,
                  condition) -> PropertyReport:
        for model in models(dlp, semantics, alphabet):
            if not condition(model):
                return PropertyReport(self.name, semantics, inputs, False, witness=model)
        return PropertyReport(self.name, semantics, inputs, True)


class PropertyFactory(ObjectFactory):
    def get(self, name: str, **kwargs) -> PropertyBase:
        return self.create(name, **kwargs)

    @property
    def properties(self) -> List[str]:
        """Get the list of the registered property names"""
        return self.keys_function(do_sort=False)


@PropertyFactory.register('generalisation')
class Generalisation(PropertyBase):
    """A single program has its stable models"""
    name = 'generalisation'

    def evaluate(self, semantics, program, alphabet):
        program = as_program(program)
        left_models = models(DLP.single(program), semantics, alphabet)
        right_models = models(DLP.single(program), SemanticsId.SM, alphabet)
        if left_models == right_models:
            return PropertyReport(self.name, semantics, (program,), True)
        return PropertyReport(self.name, semantics, (program,), False, witness=(left_models, right_models))

    def generate(self, rng, params, strong_negation):
        return (gen.random_program(rng, gen.random_atoms(rng, params), params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp[0],) if len(dlp) == 1 else None


@PropertyFactory.register('primacy')
class Primacy(PropertyBase):
    """Every model satisfies the last update"""
    name = 'primacy'

    def evaluate(self, semantics, dlp, alphabet):
        return self.per_model(semantics, (dlp,), dlp, alphabet, lambda model: satisfies(model, dlp[-1]))

    def generate(self, rng, params, strong_negation):
        return (gen.generate_random_dlp(rng, params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp,)


def fact_update_model(dlp: DLP) -> Interpretation:
    """Objective facts not overridden by a later not l. or -l. fact"""
    literals = set()
    for index, component in enumerate(dlp):
        later = {rule.head for comp in dlp.components[index + 1:] for rule in comp}
        for rule in component:
            if rule.head.is_objective and not (con(rule.head) & later):
                literals.add(rule.head.objective)
    return Interpretation(frozenset(literals))


@PropertyFactory.register('fact-update')
class FactUpdate(PropertyBase):
    """A sequence of consistent sets of facts has a single model made of the facts not overridden later"""
    name = 'fact-update'

    def evaluate(self, semantics, dlp, alphabet):
        if not all(is_consistent_facts(component) for component in dlp):
            raise ShapeError('Fact update needs a sequence of consistent sets of facts')
        found = models(dlp, semantics, alphabet)
        expected = ModelSet((fact_update_model(dlp),))
        if found == expected:
            return PropertyReport(self.name, semantics, (dlp,), True)
        return PropertyReport(self.name, semantics, (dlp,), False, witness=(found, expected))

    def generate(self, rng, params, strong_negation):
        return (gen.consistent_fact_dlp(rng, params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp,) if all(is_consistent_facts(component) for component in dlp) else None


@PropertyFactory.register('support')
class Support(PropertyBase):
    """Each true literal of a model is the head of a rule whose body it satisfies"""
    name = 'support'

    def evaluate(self, semantics, dlp, alphabet):
        rules = dlp.all_rules()

        def supported(model):
            return all(any(rule.head == Literal(lit) and satisfies(model, rule.body) for rule in rules)
                       for lit in model.literals)

        return self.per_model(semantics, (dlp,), dlp, alphabet, supported)

    def generate(self, rng, params, strong_negation):
        return (gen.generate_random_dlp(rng, params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp,)


@PropertyFactory.register('idempotence')
class Idempotence(PropertyBase):
    """Updating a program by itself changes nothing"""
    name = 'idempotence'

    def evaluate(self, semantics, program, alphabet):
        program = as_program(program)
        return self.compare(semantics, (program,), DLP((program, program)), DLP.single(program), alphabet)

    def generate(self, rng, params, strong_negation):
        return (gen.random_program(rng, gen.random_atoms(rng, params), params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp[0],) if len(dlp) == 1 else None


@PropertyFactory.register('absorption')
class Absorption(PropertyBase):
    """Repeating the last update changes nothing"""
    name = 'absorption'
    arity = 2

    def evaluate(self, semantics, program, update, alphabet):
        program, update = as_program(program), as_program(update)
        return self.compare(semantics, (program, update), DLP((program, update, update)),
                            DLP((program, update)), alphabet)

    def generate(self, rng, params, strong_negation):
        atoms = gen.random_atoms(rng, params)
        half = max(params.max_rules // 2, 1)
        return (gen.random_program(rng, atoms, params, strong_negation, half),
                gen.random_program(rng, atoms, params, strong_negation, half))

    def from_dlp(self, dlp):
        return tuple(dlp.components) if len(dlp) == 2 else None


@PropertyFactory.register('augmentation')
class Augmentation(PropertyBase):
    """Updating by U then by a superset V of U is updating by V"""
    name = 'augmentation'
    arity = 3

    def evaluate(self, semantics, program, smaller, larger, alphabet):
        program, smaller, larger = as_program(program), as_program(smaller), as_program(larger)
        if not set(smaller.rules) <= set(larger.rules):
            raise ShapeError('Augmentation needs the first update to be included in the second one')
        return self.compare(semantics, (program, smaller, larger), DLP((program, smaller, larger)),
                            DLP((program, larger)), alphabet)

    def generate(self, rng, params, strong_negation):
        atoms = gen.random_atoms(rng, params)
        third = max(params.max_rules // 3, 1)
        program = gen.random_program(rng, atoms, params, strong_negation, third)
        smaller = gen.random_program(rng, atoms, params, strong_negation, third)
        return program, smaller, smaller + gen.random_program(rng, atoms, params, strong_negation, third)

    def from_dlp(self, dlp):
        if len(dlp) == 3 and set(dlp[1].rules) <= set(dlp[2].rules):
            return tuple(dlp.components)
        return None


@PropertyFactory.register('non-interference')
class NonInterference(PropertyBase):
    """Updates over disjoint alphabets commute"""
    name = 'non-interference'
    arity = 3

    def evaluate(self, semantics, program, first, second, alphabet):
        program, first, second = as_program(program), as_program(first), as_program(second)
        if not alphabet_of(first).isdisjoint(alphabet_of(second)):
            raise ShapeError('Non-interference needs updates over disjoint alphabets')
        return self.compare(semantics, (program, first, second), DLP((program, first, second)),
                            DLP((program, second, first)), alphabet)

    def generate(self, rng, params, strong_negation):
        atoms, first_atoms, second_atoms = gen.split_atoms(rng, params)
        third = max(params.max_rules // 3, 1)
        return (gen.random_program(rng, atoms, params, strong_negation, third),
                gen.random_program(rng, first_atoms, params, strong_negation, third),
                gen.random_program(rng, second_atoms, params, strong_negation, third)
                if second_atoms else Program())

    def from_dlp(self, dlp):
        if len(dlp) == 3 and alphabet_of(dlp[1]).isdisjoint(alphabet_of(dlp[2])):
            return tuple(dlp.components)
        return None


@PropertyFactory.register('empty-update')
class EmptyUpdate(PropertyBase):
    """Dropping an empty component changes nothing"""
    name = 'empty-update'
    expected_failures = (SemanticsId.RD_EXPONE, SemanticsId.WS_EXPONE)

    def evaluate(self, semantics, dlp, alphabet):
        empty = [index for index, component in enumerate(dlp) if len(component) == 0]
        if len(dlp) < 2 or not empty:
            raise ShapeError('Immunity to empty updates needs a DLP with an empty component and another one')
        for index in empty:
            report = self.compare(semantics, (dlp,), dlp,
                                  DLP(dlp.components[:index] + dlp.components[index + 1:]), alphabet)
            if not report.holds:
                return report
        return PropertyReport(self.name, semantics, (dlp,), True)

    def generate(self, rng, params, strong_negation):
        dlp = gen.generate_random_dlp(rng, params, strong_negation)
        position = int(rng.integers(len(dlp) + 1))
        return (DLP(dlp.components[:position] + (Program(),) + dlp.components[position:]),)

    def from_dlp(self, dlp):
        return (dlp,) if len(dlp) > 1 and any(len(component) == 0 for component in dlp) else None


@PropertyFactory.register('tautologies')
class Tautologies(PropertyBase):
    """Adding tautologies to the components changes nothing"""
    name = 'tautologies'
    arity = 2

    def evaluate(self, semantics, dlp, tautologies, alphabet):
        if len(dlp) != len(tautologies):
            raise ShapeError('Tautologies must come as a DLP as long as the updated one')
        if not all(component.is_tautologies for component in tautologies):
            raise ShapeError('Immunity to tautologies needs components made of tautologies only')
        augmented = DLP(tuple(comp + taut for comp, taut in zip(dlp, tautologies)))
        return self.compare(semantics, (dlp, tautologies), augmented, dlp, alphabet)

    def generate(self, rng, params, strong_negation):
        dlp = gen.generate_random_dlp(rng, params, strong_negation)
        atoms = list(alphabet_of(dlp)) or gen.atom_pool(1)
        return dlp, gen.tautology_dlp(rng, atoms, params, strong_negation, len(dlp))

    def from_dlp(self, dlp):
        """Split every component into its tautologies and its other rules"""
        tautologies = DLP(tuple(Program(tuple(rule for rule in comp if rule.is_tautology)) for comp in dlp))
        if sum(len(comp) for comp in tautologies) == 0:
            return None
        others = DLP(tuple(Program(tuple(rule for rule in comp if not rule.is_tautology)) for comp in dlp))
        return others, tautologies


@PropertyFactory.register('causal-rejection')
class CausalRejection(PropertyBase):
    """A rule violated by a model is overridden by a later conflicting rule whose body the model satisfies"""
    name = 'causal-rejection'

    def evaluate(self, semantics, dlp, alphabet):
        occurrences = dlp.all()

        def justified(model):
            for occ in occurrences:
                if satisfies(model, occ.rule):
                    continue
                if not any(later.component > occ.component and later.rule.head in con(occ.rule.head)
                           and satisfies(model, later.rule.body) for later in occurrences):
                    return False
            return True

        return self.per_model(semantics, (dlp,), dlp, alphabet, justified)

    def generate(self, rng, params, strong_negation):
        return (gen.generate_random_dlp(rng, params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp,)


@PropertyFactory.register('early-recovery')
class EarlyRecovery(PropertyBase):
    """A consistent fact update solving all conflicts of a fact base leads to a model"""
    name = 'early-recovery'
    arity = 2
    expected_failures = (SemanticsId.RD_EXPTWO, SemanticsId.WS_EXPTWO)

    def evaluate(self, semantics, program, update, alphabet):
        return check_early_recovery(semantics, as_program(program), as_program(update), alphabet)

    def generate(self, rng, params, strong_negation):
        return gen.early_recovery_instance(rng, params, strong_negation)

    def from_dlp(self, dlp):
        return tuple(dlp.components) if len(dlp) == 2 and dlp.all_rules().is_facts else None


@PropertyFactory.register('generalised-early-recovery')
class GeneralisedEarlyRecovery(PropertyBase):
    """An acyclic DLP whose conflicts are all solved has a model"""
    name = 'generalised-early-recovery'
    expected_failures = (SemanticsId.RD_EXPTWO, SemanticsId.WS_EXPTWO)

    def evaluate(self, semantics, dlp, alphabet):
        return check_generalised_early_recovery(semantics, dlp, alphabet)

    def generate(self, rng, params, strong_negation):
        return (gen.acyclic_solved_dlp(rng, params, strong_negation),)

    def from_dlp(self, dlp):
        return (dlp,)


property_factory = PropertyFactory()

TABLE_PROPERTIES = ('generalisation', 'primacy', 'fact-update', 'support', 'idempotence', 'absorption',
                    'augmentation', 'non-interference', 'empty-update', 'tautologies', 'causal-rejection')
RECOVERY_PROPERTIES = ('early-recovery', 'generalised-early-recovery')


def check_table1(name: str, semantics: Union[SemanticsId, str], *inputs,
                 alphabet: Optional[Alphabet] = None) -> PropertyReport:
    """Check one update property on the given inputs

    Parameters
    ----------
    name: str
        one of TABLE_PROPERTIES or RECOVERY_PROPERTIES
    semantics: SemanticsId or its tag
    inputs: Program or DLP
        as many as the property needs, for instance (P, U, V) for augmentation

    Raises
    ------
    ShapeError: if the inputs do not have the shape the property requires
    """
    return property_factory.get(name).check(semantics, *inputs, alphabet=alphabet)


def run_property_suite(name: str, semantics: Union[SemanticsId, str], count: int, seed: int = 0,
                       params: Optional[gen.GeneratorParams] = None) -> SuiteSummary:
    """Check a property on count random instances, instance i being generated from the seed sequence (seed, i)

    Instances for RD and WS are generated without strong negation.
    """
    semantics = SemanticsId.from_tag(semantics)
    params = gen.GeneratorParams() if params is None else params
    prop = property_factory.get(name)
    summary = SuiteSummary(name, semantics, expected_failure=semantics in prop.expected_failures)
    for index in range(count):
        rng = np.random.default_rng([seed, index])
        inputs = prop.generate(rng, params, not semantics.requires_generalised)
        summary.add(prop.check(semantics, *inputs))
    logger.info(f'{name} [{semantics.tag}]: {summary.passed} passed, {summary.failed} failed, '
                f'{summary.not_applicable} not applicable')
    return summary
