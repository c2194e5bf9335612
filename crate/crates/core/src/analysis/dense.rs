//! State-vector check of the hybrid error-correction conditions
//! `⟨c_i^(ν)| E_k† E_l |c_j^(μ)⟩ = α_kl^(ν) δ_ij δ_μν` for small codes.

use num_complex::Complex64;
use serde::Serialize;

use crate::additive::combine;
use crate::code::{CodeViolation, HybridCode};
use crate::error::{Error, Result};
use crate::par::{self, Execution};
use crate::pauli::PauliVector;

/// Largest block length the dense verifier accepts.
pub const MAX_DENSE_QUBITS: usize = 10;
pub const TOLERANCE: f64 = 1e-9;
const MAX_RECORDED_VIOLATIONS: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaEntry {
    pub nu: usize,
    pub k: usize,
    pub l: usize,
    pub re: f64,
    pub im: f64,
}

impl AlphaEntry {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re, self.im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Violation {
    pub nu: usize,
    pub mu: usize,
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DenseVerificationReport {
    pub ok: bool,
    /// The error operators, indexed by `k` / `l` below.
    pub errors: Vec<String>,
    /// `α_kl^(ν)` read off the first basis state of each translated code.
    pub alpha: Vec<AlphaEntry>,
    /// At most the first 1000 violations.
    pub violations: Vec<Violation>,
    pub violation_count: usize,
}

impl DenseVerificationReport {
    pub fn alpha(&self, nu: usize, k: usize, l: usize) -> Option<Complex64> {
        self.alpha
            .iter()
            .find(|a| a.nu == nu && a.k == k && a.l == l)
            .map(AlphaEntry::value)
    }

    /// Largest `|α_kl^(ν) - α_kl^(μ)|` over all ν, μ, k, l, with its location.
    pub fn max_alpha_spread(&self) -> Option<(f64, usize, usize, usize, usize)> {
        let mut best: Option<(f64, usize, usize, usize, usize)> = None;
        for a in &self.alpha {
            for b in &self.alpha {
                if a.k == b.k && a.l == b.l && a.nu < b.nu {
                    let diff = (a.value() - b.value()).norm();
                    if best.is_none_or(|x| diff > x.0) {
                        best = Some((diff, a.nu, b.nu, a.k, a.l));
                    }
                }
            }
        }
        best
    }
}

/// Applies the Hermitian Pauli `i^{|x∧z|} X^x Z^z` to `psi`.
fn apply(p: &PauliVector, psi: &[Complex64]) -> Vec<Complex64> {
    let (x, z) = (p.x_mask() as usize, p.z_mask() as usize);
    let phase = match (x & z).count_ones() % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut out = vec![Complex64::new(0.0, 0.0); psi.len()];
    for (b, amp) in psi.iter().enumerate() {
        if amp.norm_sqr() == 0.0 {
            continue;
        }
        let sign = if (z & b).count_ones() % 2 == 1 { -1.0 } else { 1.0 };
        out[b ^ x] = amp * phase * sign;
    }
    out
}

fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

/// Pauli errors of weight `0..=max_weight`, identity first, then by weight,
/// position and letter.
pub fn low_weight_errors(n: usize, max_weight: usize) -> Vec<PauliVector> {
    fn rec(n: usize, start: usize, left: usize, x: u64, z: u64, out: &mut Vec<PauliVector>) {
        if left == 0 {
            out.push(PauliVector::from_masks_unchecked(n, x, z));
            return;
        }
        for q in start..n {
            for (bx, bz) in [(1u64, 0u64), (1, 1), (0, 1)] {
                rec(n, q + 1, left - 1, x | bx << q, z | bz << q, out);
            }
        }
    }
    let mut out = Vec::new();
    for w in 0..=max_weight.min(n) {
        rec(n, 0, w, 0, 0, &mut out);
    }
    out
}

/// Orthonormal basis of the stabilizer code: project computational basis
/// states through `Π (I + S_g)/2` and orthonormalize greedily.
fn code_basis(h: &HybridCode) -> Result<Vec<Vec<Complex64>>> {
    let n = h.n();
    let dim = 1usize << n;
    let want = 1usize << h.k();
    let mut basis: Vec<Vec<Complex64>> = Vec::with_capacity(want);
    let mut trace = 0.0;
    for x in 0..dim {
        let mut psi = vec![Complex64::new(0.0, 0.0); dim];
        psi[x] = Complex64::new(1.0, 0.0);
        for g in h.stabilizer() {
            let gp = apply(g, &psi);
            for (a, b) in psi.iter_mut().zip(gp) {
                *a = (*a + b) * 0.5;
            }
        }
        trace += psi[x].re;
        if basis.len() < want {
            for b in &basis {
                let c = inner(b, &psi);
                for (p, q) in psi.iter_mut().zip(b) {
                    *p -= c * q;
                }
            }
            let norm = inner(&psi, &psi).re.sqrt();
            if norm > 1e-6 {
                basis.push(psi.into_iter().map(|a| a / norm).collect());
            }
        }
    }
    let found = trace.round() as usize;
    if basis.len() != want || (trace - want as f64).abs() > 1e-6 {
        return Err(Error::InvalidCode(CodeViolation::ProjectorRank {
            expected: want,
            found: found.max(basis.len()),
        }));
    }
    Ok(basis)
}

/// Runs the check for all Pauli errors of weight at most `max_error_weight`.
pub fn dense_verify(h: &HybridCode, max_error_weight: usize, exec: Execution) -> Result<DenseVerificationReport> {
    let errors = low_weight_errors(h.n(), max_error_weight);
    dense_verify_with_errors(h, &errors, exec)
}

/// Runs the check for an explicit error list.
pub fn dense_verify_with_errors(
    h: &HybridCode,
    errors: &[PauliVector],
    exec: Execution,
) -> Result<DenseVerificationReport> {
    let n = h.n();
    if n > MAX_DENSE_QUBITS {
        return Err(Error::Capacity {
            what: "dense verifier qubits",
            size: n as u128,
            cap: MAX_DENSE_QUBITS as u128,
        });
    }
    for e in errors {
        if e.n() != n {
            return Err(Error::Dimension {
                expected: n,
                found: e.n(),
            });
        }
    }
    h.validate()?;
    let seed = code_basis(h)?;
    let kdim = seed.len();
    let codes = 1usize << h.m();
    // state index s = nu * kdim + i
    let mut states = Vec::with_capacity(codes * kdim);
    for nu in 0..codes {
        let t = combine(n, h.translations(), nu as u64);
        for c in &seed {
            states.push(apply(&t, c));
        }
    }
    let images: Vec<Vec<Vec<Complex64>>> = par::map_collect(exec, errors.to_vec(), |e| {
        states.iter().map(|s| apply(&e, s)).collect()
    });
    let ne = errors.len();
    let pairs: Vec<(usize, usize)> = (0..ne).flat_map(|k| (0..ne).map(move |l| (k, l))).collect();
    let results: Vec<(Vec<AlphaEntry>, Vec<Violation>, usize)> = par::map_collect(exec, pairs, |(k, l)| {
        let mut alpha = Vec::with_capacity(codes);
        let mut viol = Vec::new();
        let mut count = 0;
        let gram = |s: usize, t: usize| inner(&images[k][s], &images[l][t]);
        for nu in 0..codes {
            let a = gram(nu * kdim, nu * kdim);
            alpha.push(AlphaEntry { nu, k, l, re: a.re, im: a.im });
            for mu in 0..codes {
                for i in 0..kdim {
                    for j in 0..kdim {
                        let g = gram(nu * kdim + i, mu * kdim + j);
                        let expected = if nu == mu && i == j { a } else { Complex64::new(0.0, 0.0) };
                        if (g - expected).norm() > TOLERANCE {
                            count += 1;
                            if viol.len() < MAX_RECORDED_VIOLATIONS {
                                viol.push(Violation { nu, mu, i, j, k, l, re: g.re, im: g.im });
                            }
                        }
                    }
                }
            }
        }
        (alpha, viol, count)
    });
    let mut alpha = Vec::new();
    let mut violations = Vec::new();
    let mut violation_count = 0;
    for (a, v, c) in results {
        alpha.extend(a);
        violation_count += c;
        for x in v {
            if violations.len() < MAX_RECORDED_VIOLATIONS {
                violations.push(x);
            }
        }
    }
    Ok(DenseVerificationReport {
        ok: violation_count == 0,
        errors: errors.iter().map(|e| e.to_string()).collect(),
        alpha,
        violations,
        violation_count,
    })
}
