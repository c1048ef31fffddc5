from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import posets
from naive import NaivePoset
from zdposet import (
    acc_chain_profile,
    ann_family,
    annihilator,
    annihilator_primes,
    annihilator_primes_bruteforce,
    build_poset,
    is_prime_ideal,
    maximal_annihilators,
    named_example,
    prime_signature,
    verify_cardinality_bound,
)
from zdposet.errors import NotAZeroDivisorError, NoZeroDivisorsError, TrivialPosetError
from zdposet.poset import zero_divisor_mask


def anns(P, *labs):
    return {annihilator(P, P.index(x)) for x in labs}


def test_family_p0(p0_3):
    fam = ann_family(p0_3)
    b = fam.b_entries
    assert len(b) == 2
    by_witness = {tuple(sorted(p0_3.labels_of(e.witnesses))): sorted(p0_3.labels_of(e.ann)) for e in b}
    assert by_witness == {
        ("{2,3}", "{2,4}", "{2}"): ["{1}", "{}"],
        ("{1}",): ["{2,3}", "{2,4}", "{2}", "{}"],
    }


def test_family_chain(chain3):
    fam = ann_family(chain3)
    assert len(fam) == 1
    assert fam.entries[0].ann.mask == 1 and not fam.entries[0].in_b
    assert fam.b_entries == ()


def test_family_deg_counterexample(deg_poset):
    assert len(ann_family(deg_poset).b_entries) == 10


def test_family_rejects_one_point():
    with pytest.raises(TrivialPosetError):
        ann_family(build_poset(["0"], []))
    with pytest.raises(TrivialPosetError):
        acc_chain_profile(build_poset(["0"], []))


def test_maximal(antichain3, powerset3, chain3):
    assert set(maximal_annihilators(antichain3)) == anns(antichain3, "{1}", "{2}", "{3}")
    assert set(maximal_annihilators(powerset3)) == anns(powerset3, "{1}", "{2}", "{3}")
    assert [a.mask for a in maximal_annihilators(chain3)] == [1]


def test_primes(deg_poset, p0_3, powerset3):
    got = annihilator_primes(deg_poset)
    assert set(got) == anns(deg_poset, *(f"{{{i}}}" for i in range(1, 7)))
    assert len(got) == 6
    assert set(annihilator_primes(p0_3)) == {e.ann for e in ann_family(p0_3).b_entries}
    assert len(annihilator_primes(powerset3)) == 3


@pytest.mark.parametrize("name, param", [("deg_counterexample", None), ("p0_trunc", 3), ("powerset", 3)])
def test_bruteforce_agrees(name, param):
    P = named_example(name, param)
    assert annihilator_primes_bruteforce(P) == annihilator_primes(P)


def test_bruteforce_edge_cases(chain3):
    assert annihilator_primes_bruteforce(chain3) == []
    with pytest.raises(NoZeroDivisorsError):
        annihilator_primes(chain3)
    vee = build_poset(["0", "a", "b"], [("0", "a"), ("0", "b")])
    assert set(annihilator_primes_bruteforce(vee)) == anns(vee, "a", "b")


def test_signatures(powerset3, deg_poset):
    P = powerset3
    sig = prime_signature(P, P.index("{1,2}"))
    assert set(sig.signature) == anns(P, "{1}", "{2}")
    D = deg_poset
    assert set(prime_signature(D, D.index("{1,2}")).signature) == anns(D, "{1}", "{2}")
    for z in ("{1}", "{3}", "{6}"):
        assert set(prime_signature(D, D.index(z)).signature) == anns(D, z)
    with pytest.raises(NotAZeroDivisorError):
        prime_signature(P, P.index("{1,2,3}"))
    with pytest.raises(NotAZeroDivisorError):
        prime_signature(P, 0)


def test_bound():
    b = verify_cardinality_bound(named_example("powerset", 3))
    assert (b.vertices, b.ann, b.limit, b.tight) == (6, 3, 6, True)
    b = verify_cardinality_bound(named_example("antichain", 4))
    assert (b.vertices, b.ann, b.limit, b.tight) == (4, 4, 14, False)
    b = verify_cardinality_bound(named_example("p0_trunc", 3))
    assert (b.vertices, b.ann, b.limit, b.tight) == (2, 2, 2, True)
    assert b.to_dict() == {"v": 2, "ann": 2, "limit": 2, "tight": True}


def test_chain_profile(antichain3, deg_poset, chain3, powerset3):
    # every atom is a zero-divisor, so {0} is not an annihilator here
    assert acc_chain_profile(antichain3).length == 1
    assert acc_chain_profile(chain3).length == 1
    rep = acc_chain_profile(deg_poset)
    assert rep.length == 2
    assert all(a < b for a, b in zip(rep.witness, rep.witness[1:]))
    rep = acc_chain_profile(powerset3)
    assert rep.length == 3
    assert rep.witness[0].mask == 1


@settings(max_examples=120, deadline=None)
@given(posets(max_size=9))
def test_two_routes_to_primes_agree(P):
    if not zero_divisor_mask(P):
        return
    fast = annihilator_primes(P)
    assert fast == annihilator_primes_bruteforce(P)
    assert all(is_prime_ideal(P, p) for p in fast)
    ref = NaivePoset(range(P.n), P.leq, 0)
    assert {frozenset(p) for p in fast} == set(ref.primes())


@settings(max_examples=80, deadline=None)
@given(posets(max_size=9))
def test_signatures_injective(P):
    if not zero_divisor_mask(P):
        return
    primes = annihilator_primes(P)
    seen = {}
    for e in ann_family(P).b_entries:
        x = min(e.witnesses)
        sig = frozenset(prime_signature(P, x, primes).signature)
        assert sig and len(sig) < len(primes)
        assert seen.setdefault(sig, e.ann) == e.ann
    assert verify_cardinality_bound(P).holds
