#pragma once

// Metal units throughout: length Å, time ps, energy eV, mass g/mol (amu),
// temperature K, velocity Å/ps, force eV/Å, stress eV/Å³ (converted to GPa
// only at output boundaries). All unit conversion constants live here.

namespace crackmd::units {

// Boltzmann constant [eV/K]
inline constexpr double kB = 8.617333262e-5;

// mass[amu] * velocity[Å/ps]^2 -> energy[eV]
// (1 amu * Å²/ps² = 1.66053906660e-23 J; 1 eV = 1.602176634e-19 J)
inline constexpr double mvv2e = 1.0364269574711572e-4;

// force[eV/Å] / mass[amu] -> acceleration[Å/ps²]
inline constexpr double ftm2a = 1.0 / mvv2e;

// stress: eV/Å³ -> GPa
inline constexpr double evA3_to_GPa = 160.21766208;

// strain rate: 1/s -> 1/ps
inline constexpr double per_s_to_per_ps = 1e-12;

} // namespace crackmd::units
