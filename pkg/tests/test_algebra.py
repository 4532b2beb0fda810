"""Tests for the dimensional transformation algebra."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cosmicode.errors import DimensionError, DomainError
from cosmicode.physics.algebra import (
    QvslDirection,
    SusyDirection,
    boson_ladder,
    characteristic_energy,
    effective_rest_mass,
    leap_fission,
    leap_fusion,
    qvsl_speed,
    qvsl_transform,
    split_orbitals,
    state_energy,
    superluminal_energy,
    susy_step,
    susy_walk,
    vsl_speed,
)
from cosmicode.physics.constants import PhysicalConstants
from cosmicode.physics.models import OrbitalSet, ParticleKind, ParticleState

CONSTANTS = PhysicalConstants()
ALPHA = CONSTANTS.alpha


def make_state(big_d: int, d: int, mass: float = 1.0, kind=ParticleKind.BOSON) -> ParticleState:
    """Create a test state."""
    return ParticleState.make(big_d, d, mass, kind=kind)


class TestVslSpeed:
    """Tests for the continuous reference curve."""

    def test_unit_scale_factor(self):
        """Test a = 1 leaves c0 unchanged."""
        assert vsl_speed(1.0, 1.0, 5.3) == 1.0

    def test_cube(self):
        """Test 2**3."""
        assert vsl_speed(1.0, 2.0, 3.0) == 8.0

    def test_negative_exponent(self):
        """Test c0 * a**-1."""
        assert vsl_speed(2.5, 10.0, -1.0) == pytest.approx(0.25)

    def test_non_positive_inputs(self):
        """Test non-positive inputs are rejected."""
        with pytest.raises(DomainError):
            vsl_speed(0.0, 2.0, 1.0)
        with pytest.raises(DomainError):
            vsl_speed(1.0, -2.0, 1.0)


class TestQvslSpeed:
    """Tests for quantized light speeds."""

    def test_four_dimensions(self, constants):
        """Test D = 4 is the observed speed."""
        assert qvsl_speed(constants, 4) == constants.c

    def test_five_dimensions(self, constants):
        """Test D = 5 is c / alpha."""
        assert qvsl_speed(constants, 5) == pytest.approx(137.036, rel=1e-6)

    def test_eleven_dimensions(self, constants):
        """Test D = 11 is c / alpha**7."""
        assert qvsl_speed(constants, 11) == pytest.approx(9.06e14, rel=1e-2)
        assert qvsl_speed(constants, 11) == pytest.approx(ALPHA**-7, rel=1e-12)

    def test_strictly_increasing(self, constants):
        """Test the speed grows with D."""
        speeds = [qvsl_speed(constants, big_d) for big_d in range(4, 12)]
        assert all(b > a for a, b in zip(speeds, speeds[1:]))

    @pytest.mark.parametrize("big_d", [3, 12])
    def test_out_of_range(self, constants, big_d):
        """Test D outside [4, 11]."""
        with pytest.raises(DimensionError):
            qvsl_speed(constants, big_d)


class TestEnergies:
    """Tests for superluminal energy and effective rest mass."""

    def test_superluminal_identity(self, constants):
        """Test D = 4 is E = M0 c**2."""
        assert superluminal_energy(constants, 1.0, 4) == 1.0

    def test_superluminal_five(self, constants):
        """Test D = 5 gives 1/alpha**2."""
        assert superluminal_energy(constants, 1.0, 5) == pytest.approx(1.8779e4, rel=1e-4)

    def test_superluminal_eleven(self, constants):
        """Test D = 11 gives alpha**-14."""
        assert superluminal_energy(constants, 1.0, 11) == pytest.approx(ALPHA**-14, rel=1e-12)

    def test_effective_identity(self, constants):
        """Test d = 4 leaves the mass unchanged."""
        assert effective_rest_mass(constants, 1.0, 4) == 1.0

    def test_effective_eleven_matches_superluminal(self, constants):
        """Test both formulas give the same number at d = D = 11."""
        mass = effective_rest_mass(constants, 1.0, 11)
        assert mass * constants.c**2 == superluminal_energy(constants, 1.0, 11)

    def test_effective_six(self, constants):
        """Test 2 / alpha**4."""
        assert effective_rest_mass(constants, 2.0, 6) == pytest.approx(2 / ALPHA**4, rel=1e-12)

    def test_rejects_bad_inputs(self, constants):
        """Test non-positive mass and out-of-range dimensions."""
        with pytest.raises(DomainError):
            superluminal_energy(constants, 0.0, 5)
        with pytest.raises(DimensionError):
            effective_rest_mass(constants, 1.0, 12)

    @given(
        st.floats(min_value=1e-3, max_value=1e3, allow_nan=False),
        st.integers(min_value=4, max_value=11),
    )
    def test_equivalence(self, m0, big_d):
        """Test superluminal_energy(M0, D) == effective_rest_mass(M0, D) * c**2."""
        expected = effective_rest_mass(CONSTANTS, m0, big_d) * CONSTANTS.c**2
        assert superluminal_energy(CONSTANTS, m0, big_d) == expected

    def test_characteristic_energy(self, constants):
        """Test the B_d rungs used for milestones."""
        assert characteristic_energy(constants, 11) == constants.planck_energy
        assert characteristic_energy(constants, 10) == pytest.approx(
            constants.planck_energy * ALPHA**2, rel=1e-12
        )

    def test_state_energy_invariant_under_qvsl(self, constants):
        """Test the 4D-equivalent energy survives the transform."""
        string = make_state(10, 4, mass=2.0)
        particle = qvsl_transform(string, 6, QvslDirection.RAISE_D)
        assert state_energy(constants, string) == state_energy(constants, particle)


class TestQvslTransform:
    """Tests for qvsl_transform."""

    def test_eleven_four_to_four_eleven(self, constants):
        """Test 11D4d -> 4D11d."""
        result = qvsl_transform(make_state(11, 4), 7, QvslDirection.RAISE_D)

        assert (result.spacetime_dim, result.mass_dim) == (4, 11)
        assert result.rest_mass.exponent == -14
        assert result.rest_mass_gev(constants) == pytest.approx(ALPHA**-14, rel=1e-12)

    def test_inverse(self):
        """Test 4D11d -> 11D4d scales by alpha**14."""
        result = qvsl_transform(make_state(4, 11), 7, QvslDirection.LOWER_D)

        assert (result.spacetime_dim, result.mass_dim) == (11, 4)
        assert result.rest_mass.exponent == 14

    def test_string_to_particle(self):
        """Test 10D4d -> 4D10d."""
        result = qvsl_transform(make_state(10, 4), 6, QvslDirection.RAISE_D)

        assert result.label == "4D10d"
        assert result.rest_mass.exponent == -12

    def test_kind_preserved(self):
        """Test the kind does not change."""
        fermion = make_state(6, 5, kind=ParticleKind.FERMION)
        assert qvsl_transform(fermion, 1, QvslDirection.RAISE_D).kind is ParticleKind.FERMION

    @given(
        st.integers(4, 11),
        st.integers(4, 11),
        st.integers(1, 7),
        st.sampled_from(list(QvslDirection)),
        st.floats(min_value=1e-3, max_value=1e3, allow_nan=False),
    )
    def test_round_trip(self, big_d, d, n, direction, mass):
        """Test a transform followed by its inverse is exact."""
        state = make_state(big_d, d, mass)
        inverse = (
            QvslDirection.LOWER_D if direction is QvslDirection.RAISE_D else QvslDirection.RAISE_D
        )
        try:
            forward = qvsl_transform(state, n, direction)
        except DimensionError:
            return
        assert qvsl_transform(forward, n, inverse) == state

    def test_out_of_range(self):
        """Test targets outside [4, 11]."""
        with pytest.raises(DimensionError):
            qvsl_transform(make_state(4, 11), 1, QvslDirection.RAISE_D)
        with pytest.raises(DimensionError):
            qvsl_transform(make_state(11, 4), 1, QvslDirection.LOWER_D)

    def test_non_positive_n(self):
        """Test n must be positive."""
        with pytest.raises(DomainError):
            qvsl_transform(make_state(10, 4), 0, QvslDirection.RAISE_D)


class TestSusyStep:
    """Tests for the varying supersymmetry steps."""

    def test_boson_down(self, constants):
        """Test B11 -> F11 with mass * alpha."""
        b11 = make_state(4, 11, mass=constants.planck_energy)
        f11 = susy_step(constants, b11, SusyDirection.DOWN)

        assert f11.kind is ParticleKind.FERMION
        assert f11.mass_dim == 11
        assert f11.rest_mass_gev(constants) == pytest.approx(constants.planck_energy * ALPHA)

    def test_fermion_down(self, constants):
        """Test F11 -> B10 with mass * alpha."""
        f11 = make_state(4, 11, kind=ParticleKind.FERMION)
        b10 = susy_step(constants, f11, SusyDirection.DOWN)

        assert b10.kind is ParticleKind.BOSON
        assert b10.mass_dim == 10
        assert b10.rest_mass.exponent == 1

    def test_two_down_steps(self, constants):
        """Test B_d -> B_{d-1} multiplies by alpha**2."""
        start = make_state(4, 8, mass=3.0)
        result = susy_walk(constants, start, 2, SusyDirection.DOWN)

        assert result.kind is ParticleKind.BOSON
        assert result.mass_dim == 7
        assert result.rest_mass_gev(constants) == pytest.approx(3.0 * ALPHA**2, rel=1e-12)

    def test_up_inverts_down(self, constants):
        """Test up undoes down exactly."""
        start = make_state(4, 7, kind=ParticleKind.FERMION)
        down = susy_step(constants, start, SusyDirection.DOWN)
        assert susy_step(constants, down, SusyDirection.UP) == start

    def test_cannot_rise_above_eleven(self, constants):
        """Test B11 up would need F12."""
        with pytest.raises(DimensionError):
            susy_step(constants, make_state(4, 11), SusyDirection.UP)

    def test_cannot_fall_below_four(self, constants):
        """Test F4 down would need B3."""
        with pytest.raises(DimensionError):
            susy_step(constants, make_state(4, 4, kind=ParticleKind.FERMION), SusyDirection.DOWN)


class TestBosonLadder:
    """Tests for the F5 B5 ... F11 B11 ladder."""

    def test_order(self, constants):
        """Test the ladder order."""
        symbols = [e.symbol for e in boson_ladder(constants)]
        assert symbols == [f"{k}{d}" for d in range(5, 12) for k in ("F", "B")]

    def test_top_is_planck(self, constants):
        """Test B11 is the Planck energy."""
        top = boson_ladder(constants)[-1]
        assert top.symbol == "B11"
        assert top.mass_gev(constants) == 1.22e19

    def test_b10_energy(self, constants):
        """Test B10 ~ 6.5e14 GeV, within 10% of 6e14."""
        b10 = next(e for e in boson_ladder(constants) if e.symbol == "B10")
        energy = b10.mass_gev(constants)
        assert energy == pytest.approx(6.5e14, rel=0.01)
        assert abs(energy - 6e14) / 6e14 < 0.10

    def test_ratios(self, constants):
        """Test B_{d-1}/B_d = alpha**2 and F_d/B_d = alpha."""
        ladder = {e.symbol: e.mass_gev(constants) for e in boson_ladder(constants)}
        for d in range(6, 12):
            assert ladder[f"B{d - 1}"] / ladder[f"B{d}"] == pytest.approx(ALPHA**2, rel=1e-12)
        for d in range(5, 12):
            assert ladder[f"F{d}"] / ladder[f"B{d}"] == pytest.approx(ALPHA, rel=1e-12)


class TestLeapFission:
    """Tests for leaping fission and fusion."""

    def test_nine_to_four(self):
        """Test 4D9d with n = 5 gives a 4d core and 7 orbitals."""
        core, orbitals = leap_fission(make_state(4, 9), 5)

        assert core.label == "4D4d"
        assert core.orbital_count == 7
        assert orbitals.count == 7

    def test_orbital_pattern(self):
        """Test the orbital labels render as B5F5...B11."""
        _, orbitals = leap_fission(make_state(4, 9), 5)

        assert orbitals.pattern() == "B5F5B6F6B7F7B8F8B9F9B10F10B11"
        assert [label.dimension for label in orbitals.labels] == list(range(5, 12))

    def test_nine_to_eight(self):
        """Test n = 1 gives 3 orbitals."""
        core, orbitals = leap_fission(make_state(4, 9), 1)

        assert core.label == "4D8d"
        assert orbitals.count == 3
        assert orbitals.pattern() == "B9F9B10F10B11"

    def test_below_floor(self):
        """Test d - n < 4 is rejected."""
        with pytest.raises(DimensionError):
            leap_fission(make_state(4, 9), 6)

    def test_n_must_be_positive(self):
        """Test n = 0 is not a leap."""
        with pytest.raises(DomainError):
            leap_fission(make_state(4, 9), 0)

    def test_kind_and_mass_preserved(self):
        """Test the core keeps kind and rest mass."""
        state = make_state(4, 9, mass=2.0, kind=ParticleKind.FERMION)
        core, _ = leap_fission(state, 3)
        assert core.kind is ParticleKind.FERMION
        assert core.rest_mass == state.rest_mass

    def test_orbital_count_identity_exhaustive(self):
        """Test orbitals = 11 - d + n over all 36 (d, n) pairs."""
        pairs = [(d, n) for d in range(4, 12) for n in range(0, d - 3)]
        assert len(pairs) == 36

        for d, n in pairs:
            core, orbitals = split_orbitals(make_state(4, d), n)
            assert orbitals.count == 11 - d + n
            assert core.mass_dim == d - n
            assert core.orbital_count == orbitals.count
            assert core.mass_dim + orbitals.count == 11
            if n >= 1:
                assert leap_fission(make_state(4, d), n)[1] == orbitals

    def test_fusion_inverts_fission(self):
        """Test fusion reattaches orbitals."""
        core, _ = leap_fission(make_state(4, 9), 5)
        fused = leap_fusion(core, 5)

        assert fused.mass_dim == 9
        assert fused.orbital_count == 2
        assert fused.rest_mass == core.rest_mass

    def test_fusion_limits(self):
        """Test fusion cannot take more orbitals than it has."""
        core, _ = leap_fission(make_state(4, 6), 1)
        with pytest.raises(DimensionError):
            leap_fusion(core, core.orbital_count + 1)

    def test_orbital_labels_must_ascend(self):
        """Test OrbitalSet rejects non-ascending labels."""
        labels = OrbitalSet.above(8).labels
        with pytest.raises(ValueError):
            OrbitalSet(labels=tuple(reversed(labels)))

    def test_orbitals_above_eleven_empty(self):
        """Test an 11d particle has no orbitals to separate."""
        assert OrbitalSet.above(11).count == 0
        assert OrbitalSet.above(4).pattern() == "B5F5B6F6B7F7B8F8B9F9B10F10B11"
