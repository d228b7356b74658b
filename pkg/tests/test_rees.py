import pytest

from hodgekit.errors import PreconditionError
from hodgekit.rees import (FilteredSpace, build_rees, fiber, griffiths_check,
                           recover_filtration, rees_p1)
from hodgekit.scalars import Scalar
from hodgekit.selftest import random_filtration

from conftest import basis_vec, sc

ONE, ZERO = Scalar.one(), Scalar.zero()


def flag2():
    return FilteredSpace(2, {0: [basis_vec(0, 2), basis_vec(1, 2)],
                             1: [basis_vec(0, 2)]})


def test_build_examples():
    triv = FilteredSpace(3, {0: [basis_vec(i, 3) for i in range(3)]})
    assert build_rees(triv).weights == (0, 0, 0)
    assert build_rees(flag2()).weights == (1, 0)
    shifted = FilteredSpace(1, {3: [[ONE]]})
    assert build_rees(shifted).weights == (3,)


def test_validation():
    with pytest.raises(PreconditionError):
        FilteredSpace(2, {0: [basis_vec(0, 2)]})          # not complete
    with pytest.raises(PreconditionError):
        FilteredSpace(2, {0: [basis_vec(0, 2), basis_vec(1, 2)],
                          2: [basis_vec(0, 2)]})          # gap in indices
    with pytest.raises(PreconditionError):
        # not nested: F^1 contains a vector outside F^0... impossible at top,
        # so test a middle step that leaves the smaller one
        FilteredSpace(2, {0: [basis_vec(0, 2), basis_vec(1, 2)],
                          1: [basis_vec(0, 2)],
                          2: [basis_vec(1, 2)]})


def test_recover_examples():
    triv = FilteredSpace(3, {0: [basis_vec(i, 3) for i in range(3)]})
    assert recover_filtration(build_rees(triv)).equal(triv)
    fs = flag2()
    rec = recover_filtration(build_rees(fs))
    assert rec.equal(fs)
    assert rec.dim(1) == 1 and rec.contains(1, basis_vec(0, 2))


def test_roundtrip_randomized(rng):
    for _ in range(40):
        fs = random_filtration(rng, max_dim=6, max_len=5)
        rm = build_rees(fs)
        assert recover_filtration(rm).equal(fs)
        assert sum(fiber(rm, 0).values()) == fiber(rm, 1) == fs.n


def test_fiber():
    rm = build_rees(flag2())
    assert fiber(rm, 0) == {1: 1, 0: 1}
    assert fiber(rm, 1) == 2
    triv = FilteredSpace(3, {0: [basis_vec(i, 3) for i in range(3)]})
    assert fiber(build_rees(triv), 0) == {0: 3}
    with pytest.raises(PreconditionError):
        fiber(rm, 2)


def test_griffiths_examples():
    fs = flag2()
    zero_mat = [[ZERO] * 2 for _ in range(2)]
    assert griffiths_check(fs, [zero_mat])
    drop_one = [[ZERO, ZERO], [ONE, ZERO]]   # e1 -> e2, one step down
    assert griffiths_check(fs, [drop_one])
    fs3 = FilteredSpace(3, {0: [basis_vec(i, 3) for i in range(3)],
                            1: [basis_vec(0, 3), basis_vec(1, 3)],
                            2: [basis_vec(0, 3)]})
    drop_two = [[ZERO] * 3 for _ in range(3)]
    drop_two[2][0] = ONE                     # e1 -> e3 lands outside F^1
    assert not griffiths_check(fs3, [drop_two])


def test_griffiths_monotone_under_coarsening(rng):
    # dropping an intermediate step can only weaken the condition
    for _ in range(10):
        fs = random_filtration(rng, max_dim=5, max_len=4)
        if fs.p_max - fs.p_min < 2:
            continue
        mats = [[[sc(rng.randint(-1, 1)) for _ in range(fs.n)]
                 for _ in range(fs.n)]]
        if not griffiths_check(fs, mats):
            continue
        p_drop = rng.randint(fs.p_min + 1, fs.p_max - 1)
        steps = {}
        shift = 0
        for p in fs.steps_range():
            if p == p_drop:
                shift = 1
                continue
            steps[p - shift] = fs.basis(p)
        coarser = FilteredSpace(fs.n, steps)
        assert griffiths_check(coarser, mats)


def test_rees_p1_orientation_sign_audit():
    # one-dimensional space with F-weight p and Fbar-weight q must split (p+q)
    for p, q in [(1, 0), (0, 1), (2, 3), (-1, 2)]:
        lo_p, lo_q = min(p, 0), min(q, 0)
        fs = FilteredSpace(1, {pp: [[ONE]] for pp in range(lo_p, p + 1)})
        gs = FilteredSpace(1, {qq: [[ONE]] for qq in range(lo_q, q + 1)})
        _, report = rees_p1(fs, gs)
        assert report.splitting == (p + q,)
        assert report.pure and report.weight == p + q


def test_rees_p1_purity_cases():
    transverse = FilteredSpace(2, {0: [basis_vec(0, 2), basis_vec(1, 2)],
                                   1: [basis_vec(1, 2)]})
    _, rep = rees_p1(flag2(), transverse)
    assert rep.splitting == (1, 1) and rep.pure and rep.weight == 1
    _, rep = rees_p1(flag2(), flag2())
    assert rep.splitting == (2, 0) and not rep.pure and rep.weight is None


def test_rees_p1_weight_sum(rng):
    for _ in range(10):
        fs = random_filtration(rng, max_dim=4, max_len=3)
        gs = random_filtration(rng, max_dim=4, max_len=3)
        if fs.n != gs.n:
            continue
        _, rep = rees_p1(fs, gs)
        expect = sum(p * (fs.dim(p) - fs.dim(p + 1))
                     for p in fs.steps_range())
        expect += sum(q * (gs.dim(q) - gs.dim(q + 1))
                      for q in gs.steps_range())
        assert sum(rep.splitting) == expect


def test_rees_p1_with_conjugation_pairing():
    # pairing v -> P conj(v); a gaussian line conjugated back should still
    # produce the pure weight p+q
    i = Scalar.i()
    fs = FilteredSpace(2, {0: [[ONE, ZERO], [ZERO, ONE]], 1: [[ONE, i]]})
    gsbar = FilteredSpace(2, {0: [[ONE, ZERO], [ZERO, ONE]], 1: [[ONE, -i]]})
    ident = [[ONE, ZERO], [ZERO, ONE]]
    _, rep = rees_p1(fs, gsbar, pairing=ident)
    # conj maps the Fbar line back onto the F line: degenerate case (2, 0)
    assert rep.splitting == (2, 0)
    _, rep2 = rees_p1(fs, gsbar)
    assert rep2.splitting == (1, 1)
