import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracle
from deflogic.logic import (
    BOTTOM,
    INCONSISTENT,
    TOP,
    And,
    Cn,
    FinTheory,
    Iff,
    Implies,
    Not,
    Or,
    ParseError,
    Var,
    atom,
    atoms,
    atoms_of,
    conj,
    contains,
    dedup_theories,
    disj,
    entails,
    equivalent_formulas,
    evaluate,
    find_model,
    forget,
    formula_set,
    parse_formula,
    project,
    satisfiable,
    simplify,
    theory_equal,
    to_text,
)

p, q, r = atoms("p q r")
NAMES = ("p", "q", "r", "s")


def formulas(depth: int = 3):
    leaves = st.one_of(
        st.sampled_from(NAMES).map(Var),
        st.sampled_from((TOP, BOTTOM)),
    )

    def extend(children):
        return st.one_of(
            children.map(Not),
            st.tuples(st.sampled_from((And, Or, Implies, Iff)), children, children).map(
                lambda t: t[0](t[1], t[2])
            ),
        )

    return st.recursive(leaves, extend, max_leaves=2**depth)


# construction and basics


def test_formulas_are_immutable_and_hashable():
    f = p & ~q
    with pytest.raises(AttributeError):
        f.left = q
    assert {f, And(p, Not(q))} == {f}
    assert f == And(Var("p"), Not(Var("q")))
    assert f != And(q, Not(p))


def test_operators_build_nodes():
    assert (p | q) == Or(p, q)
    assert p.implies(q) == Implies(p, q)
    assert p.iff(q) == Iff(p, q)


@pytest.mark.parametrize("bad", ["", "1p", "true", "false", "a-b"])
def test_atom_rejects_bad_names(bad):
    with pytest.raises(ValueError):
        atom(bad)


def test_conj_disj_empty_and_nesting():
    assert conj([]) == TOP
    assert disj([]) == BOTTOM
    assert conj([p, q, r]) == And(And(p, q), r)
    assert disj([p]) == p


def test_atoms_of():
    assert atoms_of(p.implies(q | ~r)) == {"p", "q", "r"}
    assert atoms_of([TOP, BOTTOM]) == frozenset()


def test_formula_set_dedups_in_order():
    assert formula_set([q, p, q, And(p, q), p & q]) == (q, p, p & q)


def test_simplify_folds_constants():
    assert simplify(And(p, TOP)) == p
    assert simplify(Or(p, TOP)) == TOP
    assert simplify(Not(Not(p))) == p
    assert simplify(Implies(BOTTOM, q)) == TOP


@given(formulas())
def test_simplify_preserves_meaning(f):
    u = NAMES
    assert oracle.models(simplify(f), u) == oracle.models(f, u)


@given(formulas(), st.dictionaries(st.sampled_from(NAMES), st.booleans(), min_size=4))
def test_evaluate_matches_oracle(f, valuation):
    assert evaluate(f, valuation) == oracle.truth(f, valuation)


# parsing and printing


@pytest.mark.parametrize(
    "text, expected",
    [
        ("p", Var("p")),
        ("!p", Not(Var("p"))),
        ("p & q | r", Or(And(p, q), r)),
        ("p | q & r", Or(p, And(q, r))),
        ("p -> q -> r", Implies(p, Implies(q, r))),
        ("p <-> q <-> r", Iff(Iff(p, q), r)),
        ("p -> q <-> r", Iff(Implies(p, q), r)),
        ("!(p & q)", Not(And(p, q))),
        ("!!p", Not(Not(p))),
        ("true & false", And(TOP, BOTTOM)),
        ("  _x1 ", Var("_x1")),
    ],
)
def test_parse_precedence(text, expected):
    assert parse_formula(text) == expected


@pytest.mark.parametrize(
    "text, offset",
    [("", 0), ("p &", 3), ("(p", 2), ("p q", 2), ("p $ q", 2), ("p)", 1), ("ä & p", 0)],
)
def test_parse_errors_have_offsets(text, offset):
    with pytest.raises(ParseError) as e:
        parse_formula(text)
    assert e.value.offset == offset


def test_parse_error_offset_is_in_bytes():
    with pytest.raises(ParseError) as e:
        parse_formula("p & ä")
    assert e.value.offset == 4
    with pytest.raises(ParseError) as e:
        parse_formula("ä")
    assert e.value.offset == 0


@pytest.mark.parametrize(
    "f, text",
    [
        (Or(And(p, q), r), "p & q | r"),
        (And(Or(p, q), r), "(p | q) & r"),
        (Implies(Implies(p, q), r), "(p -> q) -> r"),
        (Implies(p, Implies(q, r)), "p -> q -> r"),
        (Iff(p, Iff(q, r)), "p <-> (q <-> r)"),
        (Not(Or(p, q)), "!(p | q)"),
        (And(p, And(q, r)), "p & (q & r)"),
        (TOP, "true"),
    ],
)
def test_printer_minimal_parentheses(f, text):
    assert to_text(f) == text


@given(formulas(4))
def test_print_parse_round_trip(f):
    assert parse_formula(to_text(f)) == f


# satisfiability


@given(st.lists(formulas(), max_size=4))
def test_satisfiable_matches_truth_tables(fs):
    assert satisfiable(fs) == bool(oracle.models_of(fs, NAMES))


@given(st.lists(formulas(), max_size=3))
def test_find_model_is_a_model(fs):
    model = find_model(fs)
    if model is None:
        assert not oracle.models_of(fs, NAMES)
    else:
        full = {a: model.get(a, False) for a in NAMES}
        assert all(oracle.truth(f, full) for f in fs)


@given(st.lists(formulas(), max_size=3), formulas())
def test_entails_matches_truth_tables(fs, f):
    assert entails(fs, f) == oracle.entails(fs, f, NAMES)


def test_entailment_fast_paths():
    assert entails([p], p)
    assert entails([], TOP)
    assert entails([BOTTOM], q)
    assert not entails([], p)
    assert equivalent_formulas(~(p & q), ~p | ~q)
    assert not equivalent_formulas(p, q)


def test_pigeonhole_three_into_two_is_unsat():
    # p_ij: pigeon i in hole j
    v = {(i, j): Var(f"h{i}{j}") for i in range(3) for j in range(2)}
    fs = [v[i, 0] | v[i, 1] for i in range(3)]
    fs += [~(v[i, j] & v[k, j]) for j in range(2) for i in range(3) for k in range(i + 1, 3)]
    assert not satisfiable(fs)
    assert satisfiable(fs[:-1])


# theories


def test_fintheory_consistency_and_entailment():
    t = Cn(p, p.implies(q))
    assert not t.inconsistent
    assert t.entails(q)
    assert not t.entails(r)
    assert Cn(p, ~p).inconsistent
    assert INCONSISTENT.entails(r)
    assert str(t) == "{p, p -> q}"


def test_theory_equality_is_semantic():
    assert theory_equal(Cn(p, q), Cn(p & q))
    assert not theory_equal(Cn(p), Cn(p, q))
    assert theory_equal(Cn(p, ~p), INCONSISTENT)
    assert contains(Cn(p, q), Cn(p))
    assert not contains(Cn(p), Cn(p, q))
    assert contains(INCONSISTENT, Cn(q))


def test_dedup_prefers_short_generators_and_sorts():
    out = dedup_theories([Cn(p & q), Cn(q, p), Cn(~p)])
    assert len(out) == 2
    assert [str(t) for t in out] == ["{!p}", "{p & q}"]


@given(st.lists(formulas(), min_size=1, max_size=3), st.sampled_from(NAMES))
def test_forget_is_the_projection(fs, name):
    u = NAMES
    rest = tuple(a for a in u if a != name)
    got = forget(fs, name)
    assert name not in atoms_of(got)
    assert oracle.restrict(oracle.models(got, u), u, rest) == oracle.restrict(
        oracle.models_of(fs, u), u, rest
    )


@given(st.lists(formulas(), min_size=1, max_size=3), st.sets(st.sampled_from(NAMES)))
def test_project_matches_model_restriction(fs, keep):
    t = FinTheory(tuple(fs))
    proj = project(t, keep)
    assert proj.atoms() <= set(keep)
    sub = tuple(sorted(keep))
    if t.inconsistent:
        assert proj.inconsistent
        return
    assert oracle.models_of(proj.generators, sub) == oracle.restrict(
        oracle.models_of(fs, NAMES), NAMES, sub
    )


def test_project_order_independent():
    t = Cn(p.iff(q), q.implies(r), r | Var("s"))
    keep = {"p"}
    a = project(t, keep)
    # eliminating in another order through nested projections
    b = project(project(t, {"p", "r", "s"}), keep)
    c = project(project(t, {"p", "q"}), keep)
    assert theory_equal(a, b) and theory_equal(a, c)
