//! Unit conventions used throughout the crate.
//!
//! Energies, rates and frequencies are stored in wavenumbers (cm⁻¹), times in
//! femtoseconds. Dynamical phases are formed as `ω t` with
//! `ω [rad/fs] = 2π c · E [cm⁻¹]`, so a single conversion constant connects the
//! two systems.

use std::f64::consts::PI;

/// Speed of light in cm/fs.
pub const SPEED_OF_LIGHT_CM_FS: f64 = 2.99792458e-5;

/// Boltzmann constant in cm⁻¹/K.
pub const BOLTZMANN_CM_K: f64 = 0.6950348;

/// Angular frequency (rad/fs) per wavenumber (cm⁻¹): `2π c`.
pub const RAD_FS_PER_CM: f64 = 2.0 * PI * SPEED_OF_LIGHT_CM_FS;

/// Convert an energy in cm⁻¹ to an angular frequency in rad/fs.
#[inline]
pub fn wavenumber_to_rad_fs(energy_cm: f64) -> f64 {
    energy_cm * RAD_FS_PER_CM
}

/// Convert an angular frequency in rad/fs back to cm⁻¹.
#[inline]
pub fn rad_fs_to_wavenumber(omega_rad_fs: f64) -> f64 {
    omega_rad_fs / RAD_FS_PER_CM
}

/// Convert an inverse correlation time in fs (the config's `invnu`) to the
/// bath decay rate ν in cm⁻¹.
#[inline]
pub fn inverse_time_fs_to_wavenumber(inv_time_fs: f64) -> f64 {
    rad_fs_to_wavenumber(1.0 / inv_time_fs)
}

/// Convert a bath decay rate ν in cm⁻¹ to the inverse correlation time in fs.
#[inline]
pub fn wavenumber_to_inverse_time_fs(nu_cm: f64) -> f64 {
    1.0 / wavenumber_to_rad_fs(nu_cm)
}

/// Thermal energy k_B·T in cm⁻¹.
#[inline]
pub fn thermal_energy_cm(temperature_k: f64) -> f64 {
    BOLTZMANN_CM_K * temperature_k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_energy_conversion_is_identity() {
        for &e in &[1e-6, 1.0, 35.0, 106.2, 1445.0, 12500.0] {
            let back = rad_fs_to_wavenumber(wavenumber_to_rad_fs(e));
            assert!((back - e).abs() <= 1e-12 * e, "{e} -> {back}");
        }
    }

    #[test]
    fn round_trip_inverse_time_is_identity() {
        for &t in &[1.0, 50.0, 100.0, 166.7] {
            let back = wavenumber_to_inverse_time_fs(inverse_time_fs_to_wavenumber(t));
            assert!((back - t).abs() <= 1e-12 * t);
        }
    }

    #[test]
    fn fifty_fs_correlation_time_in_wavenumbers() {
        // 1/(50 fs) expressed as a wavenumber.
        let nu = inverse_time_fs_to_wavenumber(50.0);
        assert!((nu - 106.18).abs() < 0.01, "nu = {nu}");
    }

    #[test]
    fn matsubara_scale_at_300_k() {
        // 2π k_B T at 300 K, the spacing of thermal decay rates.
        let nu1 = 2.0 * PI * thermal_energy_cm(300.0);
        assert!((nu1 - 1310.0).abs() < 1.0, "nu1 = {nu1}");
    }
}
