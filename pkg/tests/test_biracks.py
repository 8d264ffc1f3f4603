from itertools import product

import pytest

from src.algebra.biracks import (
    biquandle_from_maps,
    birack_from_tables,
    is_birack_homomorphism,
    is_subbirack,
    kink_maps,
    quandle_promotion,
    shadow_from_table,
    tsr_birack,
)
from src.algebra.zn import identity, permutation_order
from src.errors import AxiomViolation, PreconditionFailed
from src.models import Residue

# B(x,y) = (y, sigma_y(x)) on three elements with sigma_1 = (2 3), sigma_2 = (1 3)
# and sigma_3 = id; every axiom but Yang-Baxter holds.
BROKEN_YBE_U = [[1, 1, 1], [2, 2, 2], [3, 3, 3]]
BROKEN_YBE_L = [[1, 3, 1], [3, 2, 2], [2, 1, 3]]


def test_two_element_birack(x2_birack):
    assert x2_birack.n == 2
    alpha, pi, N = kink_maps(x2_birack)
    assert alpha.images == (2, 1)
    assert pi.images == (2, 1)
    assert N == 2


def test_one_element_birack():
    b = birack_from_tables([[1]], [[1]])
    assert b.rank == 1
    assert b.alpha.images == (1,)


def test_birack_from_component_maps(x2_birack):
    b = biquandle_from_maps(2, lambda x, y: y, lambda x, y: 3 - x)
    assert (b.U, b.L) == (x2_birack.U, x2_birack.L)
    with pytest.raises(AxiomViolation) as err:
        biquandle_from_maps(2, lambda x, y: 1, lambda x, y: 1)
    assert (err.value.axiom, err.value.witness) == ("bijective", (1, 2))


def test_three_element_birack_rank(x3_birack):
    assert x3_birack.n == 3
    assert x3_birack.rank == permutation_order(x3_birack.pi)


def test_sideways_map_inverts_the_crossing(x2_birack, x3_birack):
    for b in (x2_birack, x3_birack):
        for x, y in product(range(b.n), repeat=2):
            assert b.sideways[b.b1[x][y]][x] == (b.b2[x][y], y)
            assert b.inverse[b.b1[x][y]][b.b2[x][y]] == (x, y)


def test_non_bijective_table_is_rejected():
    # B(x,y) = (1, x) from the non-rack triangle table [[1,1],[1,1]]
    with pytest.raises(AxiomViolation) as err:
        quandle_promotion([[1, 1], [1, 1]])
    assert err.value.axiom == "bijective"
    assert err.value.witness == (1, 2)


def test_diagonal_violation_has_witness():
    # B(x,y) = (x xor y, x): S(x,x) = (x, 1) is constant in its second slot
    with pytest.raises(AxiomViolation) as err:
        birack_from_tables([[1, 2], [2, 1]], [[1, 1], [2, 2]])
    assert err.value.axiom == "diagonal"
    assert err.value.witness == (2,)


def test_yang_baxter_violation_has_first_witness():
    with pytest.raises(AxiomViolation) as err:
        birack_from_tables(BROKEN_YBE_U, BROKEN_YBE_L)
    assert err.value.axiom == "ybe"
    assert err.value.witness == (1, 2, 1)


def test_table_entries_out_of_range():
    with pytest.raises(PreconditionFailed):
        birack_from_tables([[1, 3], [2, 2]], [[1, 1], [2, 2]])
    with pytest.raises(PreconditionFailed):
        birack_from_tables([[1, 1]], [[1, 1], [2, 2]])


def test_tsr_birack_preconditions():
    with pytest.raises(PreconditionFailed):
        tsr_birack(2, 1, 1, 1)
    with pytest.raises(PreconditionFailed):
        tsr_birack(4, 2, 0, 1)


def test_tsr_birack_on_z3():
    b = tsr_birack(3, 2, 0, 2)
    assert b.pi == identity(3)
    assert b.rank == 1
    # element k is stored as k + 1: B(0, 1) = (2, 0)
    assert (b.b1[0][1], b.b2[0][1]) == (2, 0)


def test_tsr_birack_accepts_residues():
    b = tsr_birack(3, Residue(value=2, modulus=3), Residue(value=0, modulus=3), Residue(value=2, modulus=3))
    assert b == tsr_birack(3, 2, 0, 2)
    with pytest.raises(PreconditionFailed):
        tsr_birack(3, Residue(value=1, modulus=5), 0, 1)


def test_swap_birack_from_tsr():
    b = tsr_birack(5, 1, 0, 1)
    assert [list(r) for r in b.U] == [[i + 1] * 5 for i in range(5)]
    assert b.U == b.L
    assert b.rank == 1


def test_quandle_promotions():
    trivial = quandle_promotion([[1, 1], [2, 2]])
    assert trivial.rank == 1
    dihedral = quandle_promotion([[(2 * j - i) % 3 + 1 for j in range(3)] for i in range(3)])
    assert dihedral.rank == 1


def test_homomorphisms(x2_birack):
    swap = tsr_birack(5, 1, 0, 1)
    assert is_birack_homomorphism([2, 1], x2_birack, x2_birack)
    assert is_birack_homomorphism({1: 1, 2: 2}, x2_birack, x2_birack)
    assert is_birack_homomorphism([1, 1], x2_birack, swap)
    assert not is_birack_homomorphism([1, 1], x2_birack, x2_birack)
    assert not is_birack_homomorphism([1], x2_birack, x2_birack)


def test_subbiracks(x2_birack):
    assert is_subbirack(x2_birack, [1, 2])
    assert is_subbirack(x2_birack, [])
    assert not is_subbirack(x2_birack, [1])
    swap = tsr_birack(5, 1, 0, 1)
    assert is_subbirack(swap, [2, 4])


def test_shadows(x2_birack, x2_shadow3, x3_shadow2):
    assert x2_shadow3.m == 3
    assert x2_shadow3.act_inv[0][0] == 2
    assert x3_shadow2.m == 2
    assert shadow_from_table(x2_birack, [[1, 1]]).m == 1


def test_shadow_condition_one_violation(x2_birack):
    with pytest.raises(AxiomViolation) as err:
        shadow_from_table(x2_birack, [[1, 2], [2, 1]])
    assert err.value.axiom == "shadow-i"
    assert err.value.witness == (1, 1, 1)


def test_shadow_action_must_be_invertible(x2_birack):
    with pytest.raises(AxiomViolation) as err:
        shadow_from_table(x2_birack, [[1, 1], [1, 1]])
    assert err.value.axiom == "action-invertible"
