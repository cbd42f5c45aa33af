"""Built-in example groups with their expected analysis results.

Three embedded group files cover the three Frobenius-Schur types that
admit the invariants this package computes: a real-type degree-3 action
of a group of order 24, a complex-type degree-8 action of a group of
order 216, and a quaternionic-type degree-20 action of a group of order
1280.  `run_fixture` replays the whole pipeline on one of them and
compares every recorded quantity, so the same code backs both the
`check-example` subcommand and the acceptance tests.

One caveat on the order-1280 entry.  The group closed from its two
generator maps matches every expectation below except primitivity: it
has abelianization C5 while its Sylow 5-subgroup is cyclic, which is
exactly the obstruction the primitivity criterion tests.  The expected
value stays `True` because that is the recorded target for this
example; `check-example g1280` therefore reports the one mismatch
honestly instead of hiding it.
"""

from __future__ import annotations

import textwrap
from dataclasses import dataclass

from .chartab import character_table, frobenius_schur, inner_product, natural_character
from .groups import close
from .torusq import (
    SymplecticForm,
    analyze,
    conjugate_pair_rep,
    natural_rep,
)
from .groupfile import GroupFile, parse_group_text


S4_FILE = textwrap.dedent("""\
    # order 24, twisted degree-3 action (permutation part times parity)
    conductor 1
    degree 3

    generator monomial
    map 2 1 3
    scalars 1; -1; 1

    generator perm
    map 2 3 1
""")

G216_FILE = textwrap.dedent("""\
    # order 216, degree 8, scalars in Z[w] for w a primitive cube root of unity
    conductor 3
    degree 8

    generator monomial
    map 3 6 2 5 8 1 4 7
    scalars 1; 1; 1; z^1; -1 + -z^1; 1; -1 + -z^1; z^1

    generator monomial
    map 1 2 4 5 3 8 6 7
    scalars -1 + -z^1; -1 + -z^1; 1; 1; 1; 1; 1; 1

    generator monomial
    map 1 2 3 4 5 6 7 8
    scalars 1; 1; z^1; z^1; z^1; -1 + -z^1; -1 + -z^1; -1 + -z^1

    lattice z^1
""")

G1280_FILE = textwrap.dedent("""\
    # order 1280, degree 20, scalars are powers of i
    conductor 4
    degree 20

    generator perm
    map 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 1 2 3 4

    generator monomial
    map 1 2 3 4 6 5 8 7 10 9 12 11 16 15 14 13 20 19 18 17
    scalars -z^1; z^1; z^1; -z^1; -1; 1; 1; -1; -z^1; -z^1; z^1; z^1; -z^1; -z^1; -z^1; -z^1; -z^1; -z^1; z^1; z^1

    form wedge 1:2 3:4 5:6 7:8 9:10 11:12 13:14 15:16 17:18 19:20

    lattice z^1
""")


@dataclass(frozen=True)
class Fixture:
    name: str
    file_text: str
    pair_analysis: bool  # analyze the block sum with the conjugate copy
    form_pairs: tuple | None  # wedge pairs for the analyzed degree, if not in the file
    expected: tuple  # ordered (check name, value) pairs
    closure_limit: int


FIXTURES = {
    "s4": Fixture(
        name="s4",
        file_text=S4_FILE,
        pair_analysis=True,
        form_pairs=((0, 3), (1, 4), (2, 5)),
        expected=(
            ("group order", 24),
            ("conjugacy classes", 5),
            ("table degrees", (1, 1, 2, 3, 3)),
            ("character irreducible", True),
            ("fs indicator", 1),
            ("eigenvalue-1 on all classes", True),
            ("primitive", True),
            ("h10", 0),
            ("h20", 1),
            ("form preserved", True),
        ),
        closure_limit=200,
    ),
    "g216": Fixture(
        name="g216",
        file_text=G216_FILE,
        pair_analysis=True,
        form_pairs=tuple((i, i + 8) for i in range(8)),
        expected=(
            ("group order", 216),
            ("character irreducible", True),
            ("fs indicator", 0),
            ("eigenvalue-1 on all classes", True),
            ("primitive", True),
            ("h10", 0),
            ("h20", 1),
            ("form preserved", True),
            ("lattice preserved", True),
            ("fibration half dimensions", (8, 8)),
            ("fibration halves isotropic", True),
        ),
        closure_limit=1000,
    ),
    "g1280": Fixture(
        name="g1280",
        file_text=G1280_FILE,
        pair_analysis=False,
        form_pairs=None,
        expected=(
            ("group order", 1280),
            ("character irreducible", True),
            ("fs indicator", -1),
            ("eigenvalue-1 on all classes", True),
            ("primitive", True),
            ("h10", 0),
            ("h20", 1),
            ("form preserved", True),
            ("lattice preserved", True),
            ("fibration", None),
        ),
        closure_limit=5000,
    ),
}


@dataclass
class FixtureResult:
    fixture: Fixture
    group_file: GroupFile
    report: object  # QuotientReport of the analyzed representation
    checks: list  # (name, expected, actual) with actual == expected iff passing

    @property
    def passed(self) -> bool:
        return all(exp == act for _, exp, act in self.checks)

    @property
    def mismatches(self):
        return [(n, e, a) for n, e, a in self.checks if e != a]


def _fibration_checks(report):
    if report.fibration is None:
        return None, None
    dims = tuple(len(basis) for basis in report.fibration)
    isotropic = True
    form = report.invariant_form
    if form is None:
        isotropic = False
    else:
        for basis in report.fibration:
            for u in basis:
                for v in basis:
                    if not form.evaluate(u, v).is_zero():
                        isotropic = False
    return dims, isotropic


def run_fixture(fixture: Fixture) -> FixtureResult:
    """Close the group, run the pipeline, and compare every expectation."""
    gf = parse_group_text(fixture.file_text, source=fixture.name)
    group = close(gf.elements(), limit=fixture.closure_limit)
    table = character_table(group)
    chi = natural_character(group)

    rep = natural_rep(group)
    if fixture.pair_analysis:
        rep = conjugate_pair_rep(rep)

    form = gf.form
    if form is None and fixture.form_pairs is not None:
        form = SymplecticForm.wedge_pairs(rep.degree, fixture.form_pairs)
    report = analyze(rep, table, form=form, lattice=gf.lattice)

    actual = {
        "group order": group.order,
        "conjugacy classes": group.num_classes,
        "table degrees": tuple(sorted(table.degrees)),
        "character irreducible": inner_product(chi, chi) == 1,
        "fs indicator": frobenius_schur(chi),
        "eigenvalue-1 on all classes": report.eigenvalue_one_all,
        "primitive": report.primitive,
        "h10": report.h10,
        "h20": report.h20,
        "form preserved": report.form_preserved,
        "lattice preserved": report.lattice_preserved,
        "fibration": report.fibration,
    }
    dims, isotropic = _fibration_checks(report)
    actual["fibration half dimensions"] = dims
    actual["fibration halves isotropic"] = isotropic

    checks = [(name, exp, actual[name]) for name, exp in fixture.expected]
    return FixtureResult(fixture=fixture, group_file=gf, report=report, checks=checks)
