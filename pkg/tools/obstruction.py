# -*- coding: utf-8 -*-

## Gassmann Tools ############################################################
# Author:     AJ Zwijnenburg
# Version:    v1.0
# Date:       2026-10-18
# Copyright:  Copyright (C) 2026 - AJ Zwijnenburg
# License:    MIT
##############################################################################

## Copyright notice ##########################################################
# Copyright 2026 AJ Zwijnenburg
#
# Permission is hereby granted, free of charge, to any person obtaining a copy 
# of this software and associated documentation files (the "Software"), to deal 
# in the Software without restriction, including without limitation the rights 
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell 
# copies of the Software, and to permit persons to whom the Software is 
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in  
# all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR 
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE # WARRANTIES OF MERCHANTABILITY, 
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE 
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM, 
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN 
# THE SOFTWARE.
##############################################################################

"""
The S invariant, csinv and the verification of the CS condition

S(pi) is the number of even invariant factors of the abelianization of pi, modulo 2. For a
surjection phi: pi -> G and almost-conjugate subgroups H, K of G, csinv(pi; phi) is
S(phi^-1(H)) - S(phi^-1(K)) in Z/2. A nonzero csinv obstructs pi from being the fundamental
group of a closed orientable 3-manifold.

:class: QuotientMap
A surjection between permutation groups given by generator images

:class: GroupHandle
A permutation group, or a finite index subgroup of a presented group

:def: s_of_group
The S invariant of a group handle

:class: CsReport
The result of one csinv computation

:def: csinv
Computes csinv for a surjection and a Gassmann pair

:class: CsVerification
The collected reports of a CS condition check

:def: verify_cs_finite
Checks the CS condition of a finite permutation group exhaustively

:def: check_cs_fp
Checks the CS condition of a presented group against one finite target

:def: find_s_distinguishing_pairs
Gassmann pairs of a finite group with differing S

:def: s16_demo, ambient_growth
The order 16 pair in the symmetric groups
"""

from __future__ import annotations
from typing import Union, List, Tuple, Dict, Any, Sequence, Mapping

from . import Verdict, InputError, LimitError
from .abstract import AbstractReport
from .config import RunConfig
from .perm import Permutation, PermGroup, abelian_invariants_of_perm_group
from .fp import (
    Presentation, CosetTable, HomomorphismSpec, coset_table_from_hom, reidemeister_schreier,
    abelianized_relation_matrix, hom_search
)
from .snf import AbelianInvariants, abelian_invariants, s_invariant
from .gassmann import (
    GassmannCertificate, Action, almost_conjugate, SubgroupLattice, search_gassmann_pairs, regular_embedding
)
from . import catalog

import logging

logger = logging.getLogger(__name__)

class QuotientMap:
    """
    A surjective homomorphism phi: P -> G of permutation groups, phi(p_i) = g_i on the generators.
    The graph {(p, phi(p))} is built as a permutation group on n + m points; phi is well defined
    exactly when the graph has the order of P.
        :param source: the group P
        :param target: the group G
        :param images: the images of the generators of P
        :raises InputError: if the map is not a well defined surjective homomorphism
    """
    def __init__(self, source: PermGroup, target: PermGroup, images: Sequence[Permutation]) -> None:
        self.source: PermGroup = source
        self.target: PermGroup = target
        self.images: List[Permutation] = list(images)

        if len(self.images) != len(source.generators):
            raise InputError(f"{len(self.images)} images for {len(source.generators)} generators")
        for image in self.images:
            if not target.contains(image):
                raise InputError(f"image {image} is not an element of the target")

        self._degree: int = source.degree
        self.graph: PermGroup = PermGroup(
            [self._pair(x, y) for x, y in zip(source.generators, self.images)], source.degree + target.degree
        )
        if self.graph.order != source.order:
            raise InputError("the generator images do not define a homomorphism")
        if PermGroup(self.images, target.degree).order != target.order:
            raise InputError("the homomorphism is not surjective")

    @classmethod
    def identity(cls, group: PermGroup) -> QuotientMap:
        return cls(group, group, group.generators)

    def _pair(self, p: Permutation, g: Permutation) -> Permutation:
        return Permutation(list(p.images) + [self._degree + x for x in g.images], check=False)

    def is_identity(self) -> bool:
        return self.source.generators == tuple(self.images)

    def preimage(self, subgroup: PermGroup) -> PermGroup:
        """
        phi^-1(H): generated by the kernel and lifts of the generators of H. The kernel is read off the
        graph stabilizing the last m points; lifts are found by sifting on the target coordinates.
            :raises InputError: if H is not a subgroup of the target
        """
        if not subgroup.is_subgroup_of(self.target):
            raise InputError("subgroup is not contained in the target")
        if self.is_identity():
            return subgroup

        n, m = self.source.degree, self.target.degree
        chain = PermGroup(self.graph.generators, n + m, base=range(n, n + m))
        kernel = [Permutation(x.images[:n], check=False) for x in chain.level_generators(m)]

        generators = list(kernel)
        for h in subgroup.generators:
            lift = self._lift(chain, h)
            generators.append(Permutation(lift.images[:n], check=False))
        output = PermGroup(generators, n)
        logger.debug(f"preimage of a subgroup of order {subgroup.order}: order {output.order}")
        return output

    def _lift(self, chain: PermGroup, h: Permutation) -> Permutation:
        """
        An element of the graph whose target coordinate is h
        """
        n = self.source.degree
        # sift (1, h) through the levels that move the target points
        g = self._pair(self.source.identity, h)
        word = chain.identity
        for level in range(len(chain.base)):
            point = chain.base[level]
            if point < n:
                break
            u, u_inverse = chain._transversals[level][g.images[point]]
            g = g * u_inverse
            word = u * word
        # g now fixes the target points, so (1, h) = g * word with g supported on the source
        return word

    def __repr__(self) -> str:
        return f"(QuotientMap:{self.source.order} -> {self.target.order})"

class GroupHandle:
    """
    A group whose S invariant can be computed: either a permutation group, or the subgroup of
    a presented group belonging to a coset table (the whole group if the table is omitted)
        :raises InputError: unless exactly one variant is given
    """
    def __init__(
        self, group: Union[None, PermGroup]=None, presentation: Union[None, Presentation]=None,
        table: Union[None, CosetTable]=None
    ) -> None:
        if (group is None) == (presentation is None):
            raise InputError("a group handle holds either a permutation group or a presentation")
        if table is not None and presentation is None:
            raise InputError("a coset table requires its presentation")
        self.group: Union[None, PermGroup] = group
        self.presentation: Union[None, Presentation] = presentation
        self.table: Union[None, CosetTable] = table

    def abelianization(self) -> AbelianInvariants:
        """
        The abelian invariants of the group
        """
        if self.group is not None:
            return abelian_invariants_of_perm_group(self.group)
        presentation = self.presentation
        if self.table is not None:
            presentation = reidemeister_schreier(self.presentation, self.table)
        return abelian_invariants(abelianized_relation_matrix(presentation), presentation.num_generators)

    def describe(self) -> str:
        if self.group is not None:
            return self.group.describe()
        if self.table is not None:
            return f"index {self.table.num_cosets} subgroup of {self.presentation.name or self.presentation}"
        return self.presentation.describe()

    def __repr__(self) -> str:
        return f"(GroupHandle:{self.describe()})"

def s_of_group(handle: GroupHandle) -> int:
    """
    The number of even invariant factors of the abelianization, modulo 2
    """
    return s_invariant(handle.abelianization())

class CsReport(AbstractReport):
    """
    The result of csinv(pi; phi) for one Gassmann pair (H, K) of G
        :param pi: description of pi
        :param phi: "identity" or the generator images of phi
        :param triple: descriptions of G, H and K
        :param certificate: the almost-conjugacy certificate of (H, K)
        :param s_h: S(phi^-1(H))
        :param s_k: S(phi^-1(K))
        :param budget_notes: notes on fallbacks and limits
    """
    def __init__(
        self, pi: str, phi: Union[str, Dict[str, str]], triple: Tuple[str, str, str],
        certificate: GassmannCertificate, s_h: int, s_k: int, budget_notes: str=""
    ) -> None:
        self.pi: str = pi
        self.phi: Union[str, Dict[str, str]] = phi
        self.triple: Tuple[str, str, str] = tuple(triple)
        self.certificate: GassmannCertificate = certificate
        self.s_h: int = s_h
        self.s_k: int = s_k
        self.csinv: int = s_h ^ s_k
        self.budget_notes: str = budget_notes

        if self.csinv == 1 and certificate.verdict:
            self.verdict: Verdict = Verdict.obstructed
        else:
            self.verdict = Verdict.consistent

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CsReport:
        """
        Rebuilds a report from its json export
            :raises InputError: if csinv or the verdict contradict the stored data
        """
        report = cls(
            data["pi"], data["phi"], (data["G"], data["H"], data["K"]),
            GassmannCertificate.from_json(data["certificate"]), data["sH"], data["sK"], data["budget_notes"]
        )
        if report.csinv != data["csinv"] or report.verdict.value != data["verdict"]:
            raise InputError("report csinv or verdict contradicts its data")
        return report

    def _export_json(self) -> Dict[str, Any]:
        return {
            "pi": self.pi,
            "phi": self.phi,
            "G": self.triple[0],
            "H": self.triple[1],
            "K": self.triple[2],
            "certificate": self.certificate._export_json(),
            "sH": self.s_h,
            "sK": self.s_k,
            "csinv": self.csinv,
            "verdict": self.verdict.value,
            "budget_notes": self.budget_notes
        }

    def _export_text(self) -> str:
        phi = self.phi if isinstance(self.phi, str) else ", ".join(f"{k} -> {v}" for k, v in self.phi.items())
        output = f"pi:  {self.pi}\n"
        output += f"phi: {phi}\n"
        output += f"G:   {self.triple[0]}\n"
        output += f"H:   {self.triple[1]}\n"
        output += f"K:   {self.triple[2]}\n"
        output += self.certificate._export_text() + "\n"
        output += f"S(H) = {self.s_h}\nS(K) = {self.s_k}\ncsinv = {self.csinv}\n"
        output += f"verdict: {self.verdict.value}"
        if self.budget_notes:
            output += f"\nnotes: {self.budget_notes}"
        return output

    def __repr__(self) -> str:
        return f"(CsReport:csinv={self.csinv}, {self.verdict.name})"

def _phi_description(phi: Union[None, str, QuotientMap, HomomorphismSpec]) -> Union[str, Dict[str, str]]:
    if phi is None or phi == "identity":
        return "identity"
    if isinstance(phi, HomomorphismSpec):
        return phi.export()
    if phi.is_identity():
        return "identity"
    return {f"g{i + 1}": str(x) for i, x in enumerate(phi.images)}

def csinv(
    pi: Union[PermGroup, Presentation], phi: Union[None, str, QuotientMap, HomomorphismSpec],
    group: PermGroup, h: PermGroup, k: PermGroup, config: Union[None, RunConfig]=None,
    certificate: Union[None, GassmannCertificate]=None
) -> CsReport:
    """
    csinv(pi; phi) = S(phi^-1(H)) - S(phi^-1(K)) for an almost-conjugate pair (H, K) of G
        :param pi: a finite permutation group or a presentation
        :param phi: "identity" or a QuotientMap for a permutation group, a HomomorphismSpec for a presentation
        :param group: the target G
        :param h: the subgroup H
        :param k: the subgroup K
        :param config: the run limits
        :param certificate: a known almost-conjugacy certificate of (H, K), computed if omitted
        :raises InputError: if the pair is not almost-conjugate or phi does not fit pi and G
        :raises LimitError: if a preimage cannot be realized within the limits
    """
    config = RunConfig() if config is None else config
    if certificate is None:
        _, certificate = almost_conjugate(group, h, k, class_limit=config.max_class_order, workers=config.workers)
    if not certificate.verdict:
        raise InputError("csinv is only defined for almost-conjugate subgroups")

    notes: List[str] = []
    if isinstance(pi, PermGroup):
        if phi is None or phi == "identity":
            if pi != group:
                raise InputError("the identity map requires pi = G")
            preimage_h, preimage_k = h, k
        elif isinstance(phi, QuotientMap):
            if phi.source != pi or phi.target != group:
                raise InputError("the quotient map does not go from pi to G")
            preimage_h, preimage_k = phi.preimage(h), phi.preimage(k)
        else:
            raise InputError("a permutation group pi needs the identity or a quotient map")
        s_h = s_of_group(GroupHandle(group=preimage_h))
        s_k = s_of_group(GroupHandle(group=preimage_k))
        description = pi.describe()

    elif isinstance(pi, Presentation):
        if not isinstance(phi, HomomorphismSpec) or phi.source != pi or phi.target != group:
            raise InputError("a presentation pi needs a homomorphism onto G")
        values = []
        for subgroup in (h, k):
            try:
                table = coset_table_from_hom(pi, phi, subgroup, config.max_coset_degree)
                values.append(s_of_group(GroupHandle(presentation=pi, table=table)))
            except LimitError:
                if not phi.injective:
                    raise LimitError("preimage realization infeasible: index too large") from None
                notes.append("index too large; S computed on the isomorphic permutation subgroup")
                values.append(s_of_group(GroupHandle(group=subgroup)))
        s_h, s_k = values
        description = pi.describe()
    else:
        raise InputError("pi must be a permutation group or a presentation")

    report = CsReport(
        description, _phi_description(phi), (group.describe(), h.describe(), k.describe()),
        certificate, s_h, s_k, "; ".join(dict.fromkeys(notes))
    )
    logger.info(f"csinv: S(H) = {s_h}, S(K) = {s_k}, csinv = {report.csinv}")
    return report

class CsVerification(AbstractReport):
    """
    The outcome of a CS condition check
        :param subject: description of the checked group
        :param verdict: the overall verdict
        :param reports: the csinv reports, in search order
        :param normal_subgroups: the number of normal subgroups (or surjections) examined
        :param notes: notes on limits and shortcuts
    """
    def __init__(
        self, subject: str, verdict: Verdict, reports: List[CsReport], normal_subgroups: int=0,
        notes: Sequence[str]=()
    ) -> None:
        self.subject: str = subject
        self.verdict: Verdict = verdict
        self.reports: List[CsReport] = list(reports)
        self.normal_subgroups: int = normal_subgroups
        self.notes: List[str] = list(notes)

    @property
    def witnesses(self) -> List[CsReport]:
        return [x for x in self.reports if x.verdict == Verdict.obstructed]

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> CsVerification:
        return cls(
            data["group"], Verdict(data["verdict"]), [CsReport.from_json(x) for x in data["reports"]],
            data["normal_subgroups"], data["budget_notes"]
        )

    def _export_json(self) -> Dict[str, Any]:
        return {
            "group": self.subject,
            "verdict": self.verdict.value,
            "normal_subgroups": self.normal_subgroups,
            "pairs_examined": len(self.reports),
            "reports": [x._export_json() for x in self.reports],
            "budget_notes": list(self.notes)
        }

    def _export_text(self) -> str:
        output = f"group: {self.subject}\n"
        output += f"normal subgroups / surjections examined: {self.normal_subgroups}\n"
        output += f"Gassmann pairs examined: {len(self.reports)}\n"
        for note in self.notes:
            output += f"note: {note}\n"
        for report in self.witnesses:
            output += "\n" + report._export_text() + "\n"
        output += f"verdict: {self.verdict.value}"
        return output

    def __repr__(self) -> str:
        return f"(CsVerification:{self.verdict.name}, {len(self.reports)} reports)"

def _partial_verdict(reports: Sequence[CsReport]) -> Verdict:
    """
    Verdict of a search stopped by a limit: an obstruction found before the limit stands
    """
    if any(x.verdict == Verdict.obstructed for x in reports):
        return Verdict.obstructed
    return Verdict.unknown

def verify_cs_finite(pi: PermGroup, config: Union[None, RunConfig]=None) -> CsVerification:
    """
    Checks csinv(pi; phi) = 0 for every surjection phi of the finite group pi. Surjections are
    classified by their kernels N; the quotient pi/N is realized as the action of pi on the
    cosets of N, its Gassmann pairs are searched exhaustively and pulled back to pi.
        :param pi: the group
        :param config: the run limits
        :returns: verdict satisfied or obstructed, or unknown when a limit was hit
    """
    config = RunConfig() if config is None else config
    description = pi.describe()
    if pi.is_abelian():
        note = "abelian group: all quotients are abelian and have no non-conjugate Gassmann pairs"
        return CsVerification(description, Verdict.satisfied, [], 0, [note])

    reports: List[CsReport] = []
    examined = 0
    try:
        lattice = SubgroupLattice(pi, limit=config.max_subgroup_order)
        for kernel in lattice.normal_subgroups():
            examined += 1
            if kernel.order == pi.order:
                continue
            if kernel.is_trivial():
                quotient, phi = pi, QuotientMap.identity(pi)
            else:
                action = Action.on_cosets(pi, kernel, config.max_coset_degree)
                quotient = PermGroup(action.generator_images(), action.degree, name=f"{pi.name or 'pi'}/N{kernel.order}")
                phi = QuotientMap(pi, quotient, quotient.generators)
            if quotient.is_abelian():
                continue

            pairs = search_gassmann_pairs(
                quotient, limit=config.max_subgroup_order, class_limit=config.max_class_order
            )
            logger.info(f"quotient by a normal subgroup of order {kernel.order}: {len(pairs)} Gassmann pairs")
            for h, k, certificate in pairs:
                reports.append(csinv(pi, phi, quotient, h, k, config, certificate))
    except LimitError as error:
        logger.warning(f"CS verification incomplete after {len(reports)} reports: {error}")
        return CsVerification(description, _partial_verdict(reports), reports, examined, [str(error)])

    if any(x.verdict == Verdict.obstructed for x in reports):
        verdict = Verdict.obstructed
    else:
        verdict = Verdict.satisfied
    return CsVerification(description, verdict, reports, examined)

def check_cs_fp(
    presentation: Presentation, group: PermGroup, config: Union[None, RunConfig]=None,
    homs: Union[None, Sequence[HomomorphismSpec]]=None,
    pairs: Union[None, Sequence[Tuple[PermGroup, PermGroup]]]=None
) -> CsVerification:
    """
    Computes csinv for every surjection of the presented group onto G and every Gassmann pair of G
        :param presentation: the presented group pi
        :param group: the finite target G
        :param config: the run limits
        :param homs: the surjections to use, searched exhaustively if omitted
        :param pairs: the Gassmann pairs to use, searched exhaustively if omitted
        :returns: obstructed if any csinv is 1; consistent if the search completed; unknown otherwise
    """
    config = RunConfig() if config is None else config
    description = presentation.describe()
    notes: List[str] = []
    reports: List[CsReport] = []
    examined = 0

    try:
        if pairs is None:
            if group.is_abelian():
                notes.append("abelian target: no non-conjugate Gassmann pairs")
                return CsVerification(description, Verdict.consistent, [], 0, notes)
            found = search_gassmann_pairs(group, limit=config.max_subgroup_order, class_limit=config.max_class_order)
        else:
            found = [(h, k, None) for h, k in pairs]
        if not found:
            notes.append("the target has no non-conjugate Gassmann pairs")
            return CsVerification(description, Verdict.consistent, [], 0, notes)

        exhaustive = True
        if homs is None:
            result = hom_search(
                presentation, group, surjective_only=True, budget=config.hom_budget,
                limit=config.max_enumeration_order
            )
            homs, exhaustive = result.homs, result.exhaustive
            if not exhaustive:
                notes.append(f"homomorphism budget of {config.hom_budget} exhausted")

        for phi in homs:
            examined += 1
            for h, k, certificate in found:
                reports.append(csinv(presentation, phi, group, h, k, config, certificate))
    except LimitError as error:
        logger.warning(f"CS check incomplete after {len(reports)} reports: {error}")
        return CsVerification(description, _partial_verdict(reports), reports, examined, notes + [str(error)])

    if any(x.verdict == Verdict.obstructed for x in reports):
        verdict = Verdict.obstructed
    elif exhaustive:
        verdict = Verdict.consistent
    else:
        verdict = Verdict.unknown
    return CsVerification(description, verdict, reports, examined, notes)

def find_s_distinguishing_pairs(group: PermGroup, config: Union[None, RunConfig]=None) -> List[CsReport]:
    """
    The Gassmann pairs (H, K) of a finite group with S(H) != S(K)
    """
    config = RunConfig() if config is None else config
    pairs = search_gassmann_pairs(group, limit=config.max_subgroup_order, class_limit=config.max_class_order)
    reports = [csinv(group, "identity", group, h, k, config, certificate) for h, k, certificate in pairs]
    return [x for x in reports if x.csinv == 1]

def _padded(group: PermGroup, degree: int, name: str) -> PermGroup:
    """
    The group acting on the first points of a larger set, fixing the rest
    """
    generators = [Permutation(list(x.images) + list(range(group.degree, degree)), check=False) for x in group.generators]
    return PermGroup(generators, degree, name=name)

def s16_pair(n: int=16) -> Tuple[PermGroup, PermGroup, PermGroup]:
    """
    (S_n, H, K) with H the regular image of Z4+Z2+Z2 and K the regular image of 16Γ2c1, on the
    first 16 points
        :raises InputError: if n < 16 or n exceeds the symmetric group catalog
    """
    if n < 16:
        raise InputError("the order 16 pair needs a symmetric group of degree at least 16")
    group = catalog.symmetric_group(n)
    h = _padded(regular_embedding(catalog.abelian_group([4, 2, 2])), n, "regular image of Z4+Z2+Z2")
    k = _padded(catalog.build_16gamma2c1(), n, "regular image of 16Γ2c1 (realization)")
    return group, h, k

def s16_demo(n: int=16, config: Union[None, RunConfig]=None) -> CsReport:
    """
    csinv(S_n; identity) for the order 16 pair: the pair is almost-conjugate in S_n as both groups
    have the same element order statistics, S(Z4+Z2+Z2) = 1 and S(16Γ2c1) = 0
    """
    config = RunConfig() if config is None else config
    group, h, k = s16_pair(n)
    _, certificate = almost_conjugate(group, h, k, class_mode="cycle_type")
    return csinv(group, "identity", group, h, k, config, certificate)

def ambient_growth(n: int, config: Union[None, RunConfig]=None) -> CsReport:
    """
    The order 16 pair inside S_n for n >= 16
    """
    return s16_demo(n, config)
