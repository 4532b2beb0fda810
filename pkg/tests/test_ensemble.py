"""Tests for ensembles and the conservation ledger."""

import math

import pytest

from cosmicode.cascade.ensemble import Ensemble, EnsembleEntry, Ledger
from cosmicode.physics.constants import AlphaScaled
from cosmicode.physics.models import ParticleKind, ParticleState


def make_entry(big_d: int = 4, d: int = 4, mass: float = 1.0, count: float = 1.0) -> EnsembleEntry:
    """Create a test entry."""
    return EnsembleEntry.single(ParticleState.make(big_d, d, mass), count)


class TestEnsembleEntry:
    """Tests for EnsembleEntry."""

    def test_single_defaults(self, constants):
        """Test a single particle."""
        entry = make_entry(mass=2.0)
        assert entry.count_value(constants) == 1.0
        assert entry.total_mass(constants) == 2.0
        assert entry.total_energy(constants) == 2.0

    def test_energy_boosted_for_extra_dimensions(self, constants):
        """Test a 10D string counts with its superluminal energy."""
        entry = EnsembleEntry(
            state=ParticleState.make(10, 4, 1.0, alpha_exponent=12), count=AlphaScaled.of(1.0)
        )
        assert entry.total_mass(constants) == pytest.approx(constants.alpha**12)
        assert entry.total_energy(constants) == 1.0

    def test_log_space_count(self, constants):
        """Test huge counts switch to log10 in summaries."""
        entry = EnsembleEntry(
            state=ParticleState.make(4, 4, 1.0), count=AlphaScaled(coefficient=1.0, exponent=-14)
        )
        assert entry.count_is_log_space(constants)
        summary = entry.summary(constants)
        assert summary["count"]["log10"] == pytest.approx(29.9, abs=0.1)

    def test_small_count_plain(self, constants):
        """Test ordinary counts stay plain numbers."""
        summary = make_entry(count=6.0).summary(constants)
        assert summary["count"] == 6.0
        assert summary["state"] == "4D4d"
        assert summary["kind"] == "boson"

    def test_large_count_held_as_mantissa(self, constants):
        """Test counts above 1e15 keep a mantissa and a decade."""
        entry = make_entry(count=3e200)
        assert entry.count.coefficient == pytest.approx(3.0)
        assert entry.count.decade == 200
        assert entry.count.log10(constants) == pytest.approx(200 + math.log10(3.0))

    def test_large_count_times_planck_mass(self, constants):
        """Test a huge count times a Planck-scale mass stays finite."""
        entry = make_entry(mass=1.22e19, count=1e280)
        assert entry.total_energy(constants) == pytest.approx(1.22e299, rel=1e-12)
        assert entry.summary(constants)["count"] == {"log10": pytest.approx(280.0)}

    def test_count_beyond_float_range(self, constants):
        """Test a total energy past the float range comes out infinite."""
        entry = make_entry(mass=1.22e19, count=1e300)
        assert math.isinf(entry.total_energy(constants))
        assert entry.summary(constants)["count"]["log10"] == pytest.approx(300.0)


class TestLedger:
    """Tests for Ledger."""

    def test_balanced(self):
        """Test equal totals."""
        ledger = Ledger(initial_gev=10.0, final_gev=10.0)
        assert ledger.relative_error == 0.0
        assert ledger.is_balanced()

    def test_unbalanced(self):
        """Test a 1% drift."""
        ledger = Ledger(initial_gev=100.0, final_gev=101.0)
        assert ledger.relative_error == pytest.approx(0.01)
        assert not ledger.is_balanced()
        assert ledger.is_balanced(tolerance=0.02)

    def test_zero_initial(self):
        """Test a zero initial total."""
        assert Ledger(initial_gev=0.0, final_gev=0.0).is_balanced()


class TestEnsemble:
    """Tests for Ensemble."""

    def test_empty(self, constants):
        """Test an empty ensemble."""
        ensemble = Ensemble()
        assert ensemble.entries == ()
        assert ensemble.total_energy(constants) == 0.0

    def test_total_includes_radiation(self, constants):
        """Test radiation energy is part of the total."""
        ensemble = Ensemble.of(make_entry(count=3.0), make_entry(mass=2.0), radiation_energy=1.5)
        assert ensemble.total_energy(constants) == 6.5

    def test_negative_radiation_rejected(self):
        """Test radiation must be non-negative."""
        with pytest.raises(ValueError):
            Ensemble(radiation_energy=-1.0)

    def test_ledger_against(self, constants):
        """Test the ledger compares against an initial total."""
        ensemble = Ensemble.of(make_entry(count=2.0))
        assert ensemble.ledger_against(2.0, constants).is_balanced()
        assert not ensemble.ledger_against(3.0, constants).is_balanced()

    def test_mixed_dimensions_sum_energies(self, constants):
        """Test entries in different spacetimes add their 4D-equivalent energies."""
        string = EnsembleEntry(
            state=ParticleState.make(10, 4, 2.0, alpha_exponent=12), count=AlphaScaled.of(1.0)
        )
        ensemble = Ensemble.of(string, make_entry(d=6, count=2.0), radiation_energy=0.5)
        assert ensemble.total_energy(constants) == pytest.approx(4.5, rel=1e-12)

    def test_exponents_kept_exact(self):
        """Test alpha exponents survive a model round trip."""
        entry = EnsembleEntry(
            state=ParticleState.make(4, 9, 3.0, kind=ParticleKind.FERMION, alpha_exponent=4),
            count=AlphaScaled(coefficient=0.5, exponent=-10),
        )
        ensemble = Ensemble.of(entry, radiation_energy=0.25)

        restored = Ensemble.model_validate(ensemble.model_dump())
        assert restored == ensemble
        assert restored.entries[0].count.exponent == -10
