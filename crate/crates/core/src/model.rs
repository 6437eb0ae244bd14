//! The Frenkel exciton model: site energies and couplings, bath assignment,
//! dipole geometry, basis transforms, and the two-exciton manifold used by
//! excited-state-absorption pathways.

use crate::error::{Error, Result};
use crate::numerics::symmetric_eigen;
use ndarray::{Array1, Array2};
use num_complex::Complex64 as C64;

/// Site energies and inter-site couplings of the excitonic Hamiltonian.
#[derive(Debug, Clone, PartialEq)]
pub struct ExcitonSystem {
    n_sites: usize,
    zero_phonon_energies: Array1<f64>,
    couplings: Array2<f64>,
    ground_energy: f64,
}

impl ExcitonSystem {
    /// Build a system from zero-phonon energies (cm⁻¹) and the symmetric
    /// coupling matrix (cm⁻¹, zero diagonal).
    pub fn new(zero_phonon_energies: Vec<f64>, couplings: Array2<f64>) -> Result<Self> {
        let n = zero_phonon_energies.len();
        if n == 0 {
            return Err(Error::Validation("system needs at least one site".into()));
        }
        if couplings.nrows() != n || couplings.ncols() != n {
            return Err(Error::Dimension {
                context: "coupling matrix".into(),
                expected: n,
                got: couplings.nrows(),
            });
        }
        let scale = couplings.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
        let mut defect = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                defect = defect.max((couplings[[i, j]] - couplings[[j, i]]).abs());
            }
        }
        if defect > 1e-12 * scale {
            return Err(Error::NotSymmetric { defect });
        }
        for i in 0..n {
            if couplings[[i, i]] != 0.0 {
                return Err(Error::Validation(format!(
                    "coupling diagonal must be exactly zero, J[{i},{i}] = {}",
                    couplings[[i, i]]
                )));
            }
        }
        Ok(Self {
            n_sites: n,
            zero_phonon_energies: Array1::from(zero_phonon_energies),
            couplings,
            ground_energy: 0.0,
        })
    }

    /// Split a full site-basis Hamiltonian into diagonal energies and couplings.
    pub fn from_hamiltonian(h: &Array2<f64>) -> Result<Self> {
        let n = h.nrows();
        let diag: Vec<f64> = (0..n).map(|i| h[[i, i]]).collect();
        let mut j = h.clone();
        for i in 0..n {
            j[[i, i]] = 0.0;
        }
        Self::new(diag, j)
    }

    pub fn with_ground_energy(mut self, e0: f64) -> Self {
        self.ground_energy = e0;
        self
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn zero_phonon_energies(&self) -> &Array1<f64> {
        &self.zero_phonon_energies
    }

    pub fn couplings(&self) -> &Array2<f64> {
        &self.couplings
    }

    pub fn ground_energy(&self) -> f64 {
        self.ground_energy
    }

    /// Site-basis Hamiltonian with zero-phonon energies on the diagonal.
    pub fn bare_hamiltonian(&self) -> Array2<f64> {
        let mut h = self.couplings.clone();
        for i in 0..self.n_sites {
            h[[i, i]] = self.zero_phonon_energies[i];
        }
        h
    }

    /// Site-basis Hamiltonian with reorganization-shifted (dressed) energies.
    pub fn dressed_hamiltonian(&self, dressed: &Array1<f64>) -> Array2<f64> {
        let mut h = self.couplings.clone();
        for i in 0..self.n_sites {
            h[[i, i]] = dressed[i];
        }
        h
    }
}

/// Assignment of independent baths to sites.
#[derive(Debug, Clone, PartialEq)]
pub struct BathMap {
    assignments: Vec<Vec<usize>>,
    n_baths: usize,
}

impl BathMap {
    /// `assignments[m]` lists the bath indices coupled to site `m`. Every bath
    /// index in `0..n_baths` must appear exactly once.
    pub fn new(assignments: Vec<Vec<usize>>, n_baths: usize) -> Result<Self> {
        let mut seen = vec![false; n_baths];
        for (site, list) in assignments.iter().enumerate() {
            for &b in list {
                if b >= n_baths {
                    return Err(Error::Validation(format!(
                        "site {site} references bath {b}, but only {n_baths} baths exist"
                    )));
                }
                if seen[b] {
                    return Err(Error::Validation(format!(
                        "bath {b} is assigned to more than one site"
                    )));
                }
                seen[b] = true;
            }
        }
        if let Some(b) = seen.iter().position(|s| !s) {
            return Err(Error::Validation(format!("bath {b} is not assigned to any site")));
        }
        Ok(Self {
            assignments,
            n_baths,
        })
    }

    /// One bath per site, bath `m` on site `m`.
    pub fn one_per_site(n_sites: usize) -> Self {
        Self {
            assignments: (0..n_sites).map(|m| vec![m]).collect(),
            n_baths: n_sites,
        }
    }

    pub fn n_baths(&self) -> usize {
        self.n_baths
    }

    pub fn n_sites(&self) -> usize {
        self.assignments.len()
    }

    pub fn baths_of_site(&self, site: usize) -> &[usize] {
        &self.assignments[site]
    }

    pub fn site_of_bath(&self, bath: usize) -> usize {
        self.assignments
            .iter()
            .position(|list| list.contains(&bath))
            .expect("bath index validated at construction")
    }
}

/// Transition-dipole geometry. Directions are normalized on load; centers are
/// carried for config fidelity but unused by the impulsive-limit spectra.
#[derive(Debug, Clone, PartialEq)]
pub struct DipoleModel {
    directions: Vec<[f64; 3]>,
    strengths: Vec<f64>,
    centers: Vec<[f64; 3]>,
}

impl DipoleModel {
    pub fn new(
        directions: Vec<[f64; 3]>,
        strengths: Vec<f64>,
        centers: Vec<[f64; 3]>,
    ) -> Result<Self> {
        if directions.len() != strengths.len() || directions.len() != centers.len() {
            return Err(Error::Dimension {
                context: "dipole model".into(),
                expected: directions.len(),
                got: strengths.len().min(centers.len()),
            });
        }
        let mut normalized = Vec::with_capacity(directions.len());
        for (i, d) in directions.iter().enumerate() {
            let norm = (d[0] * d[0] + d[1] * d[1] + d[2] * d[2]).sqrt();
            if norm < 1e-12 {
                return Err(Error::Validation(format!("dipole direction {i} has zero length")));
            }
            normalized.push([d[0] / norm, d[1] / norm, d[2] / norm]);
        }
        Ok(Self {
            directions: normalized,
            strengths,
            centers,
        })
    }

    /// Unit directions with unit strengths and centers at the origin.
    pub fn unit(directions: Vec<[f64; 3]>) -> Result<Self> {
        let n = directions.len();
        Self::new(directions, vec![1.0; n], vec![[0.0; 3]; n])
    }

    pub fn n_sites(&self) -> usize {
        self.directions.len()
    }

    pub fn direction(&self, site: usize) -> [f64; 3] {
        self.directions[site]
    }

    pub fn strength(&self, site: usize) -> f64 {
        self.strengths[site]
    }

    pub fn centers(&self) -> &[[f64; 3]] {
        &self.centers
    }

    /// Strength-weighted projection of the site dipole on Cartesian axis `p`.
    pub fn component(&self, site: usize, p: usize) -> f64 {
        self.strengths[site] * self.directions[site][p]
    }

    /// Apply a rotation matrix to every direction (used by invariance tests).
    pub fn rotated(&self, r: &Array2<f64>) -> Self {
        let directions = self
            .directions
            .iter()
            .map(|d| {
                let mut out = [0.0; 3];
                for (i, o) in out.iter_mut().enumerate() {
                    *o = (0..3).map(|j| r[[i, j]] * d[j]).sum();
                }
                out
            })
            .collect();
        Self {
            directions,
            strengths: self.strengths.clone(),
            centers: self.centers.clone(),
        }
    }
}

/// Orthogonal transform between site and exciton (energy) bases.
#[derive(Debug, Clone)]
pub struct BasisTransform {
    /// One eigenvector per row: `A · H_site · Aᵀ` is diagonal.
    pub transform: Array2<f64>,
    /// Eigenvalues in cm⁻¹, ascending.
    pub eigenvalues: Array1<f64>,
}

/// Diagonalize the bare site Hamiltonian of a system.
pub fn diagonalize(system: &ExcitonSystem) -> BasisTransform {
    diagonalize_matrix(&system.bare_hamiltonian())
}

/// Diagonalize an arbitrary symmetric site-basis Hamiltonian.
pub fn diagonalize_matrix(h: &Array2<f64>) -> BasisTransform {
    let (eigenvalues, transform) = symmetric_eigen(h);
    BasisTransform {
        transform,
        eigenvalues,
    }
}

fn check_square(rho: &Array2<C64>, dim: usize, context: &str) -> Result<()> {
    if rho.nrows() != dim || rho.ncols() != dim {
        return Err(Error::Dimension {
            context: context.into(),
            expected: dim,
            got: rho.nrows(),
        });
    }
    Ok(())
}

/// `ρ_exc = A · ρ_site · Aᵀ`.
pub fn to_exciton_basis(rho_site: &Array2<C64>, basis: &BasisTransform) -> Result<Array2<C64>> {
    check_square(rho_site, basis.transform.nrows(), "to_exciton_basis")?;
    Ok(sandwich(&basis.transform, rho_site, false))
}

/// `ρ_site = Aᵀ · ρ_exc · A`.
pub fn to_site_basis(rho_exc: &Array2<C64>, basis: &BasisTransform) -> Result<Array2<C64>> {
    check_square(rho_exc, basis.transform.nrows(), "to_site_basis")?;
    Ok(sandwich(&basis.transform, rho_exc, true))
}

/// `A ρ Aᵀ` (or `Aᵀ ρ A` when `transpose`), with real `A` and complex `ρ`.
fn sandwich(a: &Array2<f64>, rho: &Array2<C64>, transpose: bool) -> Array2<C64> {
    let n = a.nrows();
    let at = |i: usize, j: usize| -> f64 {
        if transpose {
            a[[j, i]]
        } else {
            a[[i, j]]
        }
    };
    // tmp = M · ρ
    let mut tmp = Array2::<C64>::zeros((n, n));
    for i in 0..n {
        for k in 0..n {
            let m = at(i, k);
            if m == 0.0 {
                continue;
            }
            for j in 0..n {
                tmp[[i, j]] += rho[[k, j]] * m;
            }
        }
    }
    // out = tmp · Mᵀ
    let mut out = Array2::<C64>::zeros((n, n));
    for i in 0..n {
        for j in 0..n {
            let mut acc = C64::new(0.0, 0.0);
            for k in 0..n {
                acc += tmp[[i, k]] * at(j, k);
            }
            out[[i, j]] = acc;
        }
    }
    out
}

/// Dressed site energies `ε_m = ε_m⁰ + Σ_v λ_{m,v}`.
pub fn dressed_site_energies(
    system: &ExcitonSystem,
    bath_lambdas: &[f64],
    map: &BathMap,
) -> Array1<f64> {
    let mut out = system.zero_phonon_energies.clone();
    for m in 0..system.n_sites() {
        for &b in map.baths_of_site(m) {
            out[m] += bath_lambdas[b];
        }
    }
    out
}

/// Excitation sectors of the state manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    Ground,
    Singles,
    Pairs,
}

/// State manifold over the ground state, single excitations and (optionally)
/// double excitations `|mn⟩` with `m < n`.
#[derive(Debug, Clone)]
pub struct ExcitationManifold {
    n_sites: usize,
    ground_energy: f64,
    /// Single-exciton site Hamiltonian (dressed energies on the diagonal).
    h_single: Array2<f64>,
    /// Pair list in lexicographic order; empty when pairs are excluded.
    pairs: Vec<(usize, usize)>,
}

impl ExcitationManifold {
    /// Manifold without the pair block (sufficient for linear absorption and
    /// the GB/SE pathways).
    pub fn singles(h_single: Array2<f64>, ground_energy: f64) -> Self {
        Self {
            n_sites: h_single.nrows(),
            ground_energy,
            h_single,
            pairs: Vec::new(),
        }
    }

    /// Manifold including the two-exciton block. Requires at least two sites.
    pub fn with_pairs(h_single: Array2<f64>, ground_energy: f64) -> Result<Self> {
        let n = h_single.nrows();
        if n < 2 {
            return Err(Error::Validation(
                "the two-exciton manifold needs at least two sites".into(),
            ));
        }
        let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
        for m in 0..n {
            for k in (m + 1)..n {
                pairs.push((m, k));
            }
        }
        Ok(Self {
            n_sites: n,
            ground_energy,
            h_single,
            pairs,
        })
    }

    pub fn n_sites(&self) -> usize {
        self.n_sites
    }

    pub fn has_pairs(&self) -> bool {
        !self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Total number of states: `1 + N + N(N-1)/2` with pairs, `1 + N` without.
    pub fn n_states(&self) -> usize {
        1 + self.n_sites + self.pairs.len()
    }

    pub fn sector_dim(&self, sector: Sector) -> usize {
        match sector {
            Sector::Ground => 1,
            Sector::Singles => self.n_sites,
            Sector::Pairs => self.pairs.len(),
        }
    }

    pub fn single_hamiltonian(&self) -> &Array2<f64> {
        &self.h_single
    }

    /// Diagonal Hamiltonian block of one excitation sector.
    pub fn sector_hamiltonian(&self, sector: Sector) -> Array2<f64> {
        match sector {
            Sector::Ground => Array2::from_elem((1, 1), self.ground_energy),
            Sector::Singles => self.h_single.clone(),
            Sector::Pairs => {
                let np = self.pairs.len();
                let mut h = Array2::<f64>::zeros((np, np));
                for (i, &(m, n)) in self.pairs.iter().enumerate() {
                    h[[i, i]] = self.h_single[[m, m]] + self.h_single[[n, n]];
                    for (j, &(a, b)) in self.pairs.iter().enumerate() {
                        if i == j {
                            continue;
                        }
                        // Pairs sharing one site couple through the odd one out.
                        let shared = [m, n].iter().filter(|s| [a, b].contains(s)).count();
                        if shared == 1 {
                            let p = if a == m || a == n { b } else { a };
                            let q = if m == a || m == b { n } else { m };
                            h[[i, j]] = self.h_single[[q, p]];
                        }
                    }
                }
                h
            }
        }
    }

    /// Full extended Hamiltonian over all states, sector by sector.
    pub fn full_hamiltonian(&self) -> Array2<f64> {
        let n = self.n_states();
        let mut h = Array2::<f64>::zeros((n, n));
        h[[0, 0]] = self.ground_energy;
        let ns = self.n_sites;
        for i in 0..ns {
            for j in 0..ns {
                h[[1 + i, 1 + j]] = self.h_single[[i, j]];
            }
        }
        let hp = self.sector_hamiltonian(Sector::Pairs);
        for i in 0..self.pairs.len() {
            for j in 0..self.pairs.len() {
                h[[1 + ns + i, 1 + ns + j]] = hp[[i, j]];
            }
        }
        h
    }

    /// Diagonal of the bath projector for `site` restricted to one sector.
    /// A state contributes 1 when it contains the excitation of `site`.
    pub fn site_projector_diagonal(&self, site: usize, sector: Sector) -> Vec<f64> {
        match sector {
            Sector::Ground => vec![0.0],
            Sector::Singles => (0..self.n_sites)
                .map(|m| if m == site { 1.0 } else { 0.0 })
                .collect(),
            Sector::Pairs => self
                .pairs
                .iter()
                .map(|&(m, n)| if m == site || n == site { 1.0 } else { 0.0 })
                .collect(),
        }
    }

    /// Raising-dipole entries from one sector to the next: `(row, col, site)`
    /// triples meaning `|row⟩⟨col|` weighted by the dipole of `site`.
    ///
    /// From the ground sector the targets are singles (`|m⟩⟨0|`, site `m`);
    /// from singles the targets are pairs (`|mn⟩⟨m|`, site `n`).
    pub fn raising_entries(&self, from: Sector) -> Vec<(usize, usize, usize)> {
        match from {
            Sector::Ground => (0..self.n_sites).map(|m| (m, 0, m)).collect(),
            Sector::Singles => {
                let mut out = Vec::new();
                for (i, &(m, n)) in self.pairs.iter().enumerate() {
                    out.push((i, m, n));
                    out.push((i, n, m));
                }
                out
            }
            Sector::Pairs => Vec::new(),
        }
    }
}

/// Build the two-exciton manifold from dressed site energies (Eq.-level
/// construction used by the ESA pathways).
pub fn build_two_exciton(
    system: &ExcitonSystem,
    dressed: &Array1<f64>,
) -> Result<ExcitationManifold> {
    ExcitationManifold::with_pairs(system.dressed_hamiltonian(dressed), system.ground_energy())
}
