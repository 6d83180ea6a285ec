import cmath
import math

import numpy as np
import pytest

from csecs.errors import DegenerateState
from csecs.models import fock_oracle
from csecs.models.state_model import CsEcsParams, Parity
from csecs.models.teleportation import (
    CLASSICAL_LIMIT, cf_closed, fidelity_by_cf_quadrature, fidelity_closed, fidelity_difference,
    fidelity_eecs, fidelity_term_args
)

from conftest import INV_SQRT2


class TestEecsFidelity:

    def test_known_values(self):
        assert fidelity_eecs(0) == pytest.approx(0.5, abs=1e-12)
        assert fidelity_eecs(1) == pytest.approx((1 + math.exp(-2)) / (2 * (1 + math.exp(-4))), abs=1e-12)
        assert fidelity_eecs(1) == pytest.approx(0.557457, abs=1e-6)
        assert fidelity_eecs(1j) == pytest.approx((math.exp(-2) + math.exp(-4)) / (2 * (1 + math.exp(-4))), abs=1e-12)
        assert fidelity_eecs(1j) == pytest.approx(0.075444, abs=1e-6)

    def test_real_amplitudes_beat_classical_limit(self):
        for alpha in np.linspace(0.03, 3.0, 100):
            assert fidelity_eecs(alpha) > CLASSICAL_LIMIT
        assert fidelity_eecs(8.0) == pytest.approx(0.5, abs=1e-12)

    def test_imaginary_amplitudes_fall_below(self):
        for alpha in np.linspace(0.03, 3.0, 100):
            assert fidelity_eecs(1j * alpha) < CLASSICAL_LIMIT

    def test_odd_state(self):
        alpha = 0.8
        expected = 1 / (2 * (1 + math.exp(-2 * alpha ** 2)))
        assert fidelity_eecs(alpha, Parity.ODD) == pytest.approx(expected)
        with pytest.raises(DegenerateState):
            fidelity_eecs(0.0, Parity.ODD)

    @pytest.mark.parametrize('alpha', [0.0, 0.4, 1.0, 0.5 + 0.7j, 1.3j])
    def test_closed_form_reduces_to_eecs(self, alpha):
        assert fidelity_closed(CsEcsParams.eecs(alpha)).f == pytest.approx(fidelity_eecs(alpha), abs=1e-12)


class TestCharacteristicFunction:

    def test_origin(self):
        params = CsEcsParams.from_r(1.0, 1, 2, 0.4, 0.9)
        assert cf_closed(params, 0, 0) == pytest.approx(1.0)

    @pytest.mark.parametrize('params,eta,gamma', [
        (CsEcsParams.eecs(1.0), 0.3, -0.2),
        (CsEcsParams.from_r(1.0, 1, 1, INV_SQRT2), 0.2j, 0.1),
        (CsEcsParams.from_r(0.7 + 0.2j, 2, 1, 0.3, 0.8, Parity.ODD), 0.25 - 0.1j, -0.3 + 0.2j),
        (CsEcsParams.excited(0.5, 1, 2), -0.4, 0.4j),
        (CsEcsParams.subtracted(1.2, 2, 1), 0.1 + 0.1j, 0.2),
    ])
    def test_matches_oracle(self, params, eta, gamma):
        state = fock_oracle.build_cs_eecs(params, fock_oracle.default_truncation(params.alpha))
        expected = fock_oracle.char_function(state, eta, gamma)
        assert cf_closed(params, eta, gamma) == pytest.approx(expected, abs=1e-9)

    def test_hermitian_symmetry(self):
        # chi(-eta, -gamma) = chi(eta, gamma)*
        params = CsEcsParams.from_r(0.9, 1, 1, 0.3)
        eta, gamma = 0.2 + 0.3j, -0.1j
        assert cf_closed(params, -eta, -gamma) == pytest.approx(cf_closed(params, eta, gamma).conjugate())


class TestFidelity:

    def test_report_shape(self):
        report = fidelity_closed(CsEcsParams.from_r(0.5, 1, 1, 0.195))
        assert len(report.components) == 4
        assert report.above_classical == (report.f > 0.5)
        assert set(report.to_dict()) >= {'f', 'above_classical', 'aa_re', 'ma_im'}

    def test_components_form_conjugate_pairs(self):
        report = fidelity_closed(CsEcsParams.from_r(0.4 + 0.3j, 1, 2, 0.3, 0.5))
        aa, mm, am, ma = report.components
        assert (am + ma).imag == pytest.approx(0.0, abs=1e-12)
        assert (aa + mm).imag == pytest.approx(0.0, abs=1e-12)

    def test_published_anchor(self):
        params = CsEcsParams.from_r(0.1, 1, 1, 0.05)
        f = fidelity_closed(params).f
        assert f == pytest.approx(0.65, abs=0.03)
        assert f > fidelity_eecs(0.1)

    def test_subtraction_limit_recovers_eecs(self):
        alpha = 0.6
        near_zero = fidelity_closed(CsEcsParams.from_r(alpha, 1, 1, 1e-7)).f
        exact_zero = fidelity_closed(CsEcsParams.from_r(alpha, 1, 1, 0.0)).f
        assert near_zero == pytest.approx(fidelity_eecs(alpha), abs=1e-5)
        assert exact_zero == pytest.approx(fidelity_eecs(alpha), abs=1e-12)

    def test_branch_continuity(self):
        for r in (4e-7, 2e-6):
            params = CsEcsParams.from_r(0.5, 2, 2, r)
            assert fidelity_closed(params).f == pytest.approx(fidelity_closed(params, tau_switch=0.0).f, abs=1e-9)

    def test_odd_parity_never_beats_classical_limit(self):
        worst = 0.0
        for alpha in np.linspace(0.125, 2.5, 20):
            for r in np.linspace(0.0, 0.9, 10):
                for order in (0, 1):
                    params = CsEcsParams.from_r(float(alpha), order, order, float(r), parity=Parity.ODD)
                    worst = max(worst, fidelity_closed(params).f)
        assert worst < 0.5

    def test_higher_order_overtakes_then_falls_behind(self):
        differences = [
            fidelity_closed(CsEcsParams.from_r(a, 2, 2, 0.195)).f
            - fidelity_closed(CsEcsParams.from_r(a, 1, 1, 0.195)).f
            for a in np.linspace(0.05, 1.5, 30)
        ]
        assert min(differences) < 0 < max(differences)

    def test_asymmetric_operation_degrades(self):
        symmetric = fidelity_closed(CsEcsParams.from_r(0.2, 1, 1, 0.195)).f
        asymmetric = fidelity_closed(CsEcsParams.from_r(0.2, 1, 2, 0.195)).f
        assert symmetric > asymmetric

    def test_difference_is_positive_somewhere(self):
        gains = [
            fidelity_difference(CsEcsParams.from_r(a, 1, 1, r))
            for a in np.linspace(0.05, 1.0, 10) for r in np.linspace(0.05, 0.6, 8)
        ]
        assert max(gains) > 0

    def test_term_args_nan_at_endpoints(self):
        args = fidelity_term_args(CsEcsParams.subtracted(1.0, 1, 1), 1 + 0j, 1 + 0j)
        assert cmath.isnan(args.n1) and cmath.isnan(args.m2)

    def test_report_carries_term_args(self):
        params = CsEcsParams.from_r(0.6 + 0.2j, 1, 2, 0.4, 0.7)
        report = fidelity_closed(params)
        alpha = params.alpha
        pairs = ((alpha, alpha), (-alpha, -alpha), (alpha, -alpha), (-alpha, alpha))
        expected = [fidelity_term_args(params, bra, ket) for bra, ket in pairs]
        assert list(report.term_args) == expected
        payload = report.to_dict()['term_args']
        assert sorted(payload) == ['aa', 'am', 'ma', 'mm']
        assert payload['aa']['n1'] == [expected[0].n1.real, expected[0].n1.imag]

    def test_term_args_serialize_nan_as_none(self):
        report = fidelity_closed(CsEcsParams.subtracted(1.0, 1, 1))
        assert report.to_dict()['term_args']['aa'] == {'n1': None, 'n2': None, 'm1': None, 'm2': None}

    @pytest.mark.slow
    @pytest.mark.parametrize('alpha', [0.1, 0.5, 1.0])
    @pytest.mark.parametrize('order', [0, 1, 2])
    @pytest.mark.parametrize('r', [0.05, 0.195, INV_SQRT2])
    def test_matches_oracle_quadrature(self, alpha, order, r):
        params = CsEcsParams.from_r(alpha, order, order, r)
        state = fock_oracle.build_cs_eecs(params, fock_oracle.default_truncation(alpha))
        assert fidelity_closed(params).f == pytest.approx(fock_oracle.fidelity_by_quadrature(state), abs=1e-6)

    @pytest.mark.slow
    def test_matches_characteristic_function_quadrature(self):
        params = CsEcsParams.from_r(0.5, 1, 1, 0.195)
        assert fidelity_closed(params).f == pytest.approx(fidelity_by_cf_quadrature(params), abs=1e-6)
