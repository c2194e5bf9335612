//! The enumerator program for `[[n, k:m, d]]` hybrid codes.
//!
//! Variables are `A⊥_0..A⊥_n` (the enumerator of `C₀`) followed by
//! `B⊥_0..B⊥_n` (the enumerator of `C`). The normalizer and `C*` enumerators
//! are the MacWilliams images
//! `A_w = Σ_j K[w][j] A⊥_j / 2^{n-k}` and `B_w = Σ_j K[w][j] B⊥_j / 2^{n-k-m}`;
//! every row below is multiplied through by `2^{n-k}` to stay integral.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::analysis::enumerator::krawtchouk_matrix;
use crate::error::{Error, Result};

use super::simplex::{IntegralForm, Row};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BoundQuery {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub d: usize,
    pub q: u32,
    pub use_shadow: bool,
}

impl BoundQuery {
    pub fn new(n: usize, k: usize, m: usize, d: usize, use_shadow: bool) -> Result<Self> {
        let q = BoundQuery { n, k, m, d, q: 2, use_shadow };
        q.check()?;
        Ok(q)
    }

    fn check(&self) -> Result<()> {
        if self.q != 2 {
            return Err(Error::UnsupportedAlphabet(self.q));
        }
        if self.n == 0 || self.k + self.m > self.n || self.d == 0 || self.d > self.n {
            return Err(Error::Precondition(format!(
                "invalid query [[{},{}:{},{}]]",
                self.n, self.k, self.m, self.d
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Sense {
    Le,
    Eq,
    Ge,
}

/// A named exact relation `coeffs · (A⊥, B⊥) sense rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    pub coeffs: Vec<BigInt>,
    pub sense: Sense,
    pub rhs: BigInt,
    /// Implied by the other constraints; checked but not given to the solver.
    pub implied: bool,
}

#[derive(Debug, Clone)]
pub struct EnumeratorProgram {
    pub query: BoundQuery,
    /// `2(n+1)` variables: `A⊥_0..A⊥_n, B⊥_0..B⊥_n`.
    pub num_vars: usize,
    pub constraints: Vec<Constraint>,
    /// Derived quantities that must be integers: `A_w`, `B_w` and, with the
    /// shadow enabled, the shadow coefficients.
    pub integral_forms: Vec<(String, IntegralForm)>,
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

pub fn build_program(qy: BoundQuery) -> Result<EnumeratorProgram> {
    qy.check()?;
    let BoundQuery { n, k, m, d, .. } = qy;
    let nv = 2 * (n + 1);
    let kr = krawtchouk_matrix(n);
    let a = |w: usize| w;
    let b = |w: usize| n + 1 + w;
    let zero = || vec![BigInt::zero(); nv];
    let scale = pow2(n - k);
    let two_m = pow2(m);
    // 2^{n-k} A_w and 2^{n-k} B_w as forms
    let big_a = |w: usize| {
        let mut c = zero();
        for j in 0..=n {
            c[a(j)] = kr[w][j].clone();
        }
        c
    };
    let big_b = |w: usize| {
        let mut c = zero();
        for j in 0..=n {
            c[b(j)] = &kr[w][j] * &two_m;
        }
        c
    };
    let unit = |i: usize, s: &BigInt| {
        let mut c = zero();
        c[i] = s.clone();
        c
    };
    let sub = |x: Vec<BigInt>, y: Vec<BigInt>| -> Vec<BigInt> { x.into_iter().zip(y).map(|(p, q)| p - q).collect() };
    let one = BigInt::one();

    let mut cs = Vec::new();
    let mut push = |name: String, coeffs: Vec<BigInt>, sense: Sense, rhs: BigInt| {
        cs.push(Constraint { name, coeffs, sense, rhs, implied: false });
    };

    push("A⊥_0 = 1".into(), unit(a(0), &one), Sense::Eq, one.clone());
    push("A_0 = 1".into(), big_a(0), Sense::Eq, scale.clone());
    push("B_0 = 1".into(), big_b(0), Sense::Eq, scale.clone());
    push("B⊥_0 = 1".into(), unit(b(0), &one), Sense::Eq, one.clone());
    let mut sum_a = zero();
    let mut sum_b = zero();
    for w in 0..=n {
        sum_a[a(w)] = one.clone();
        sum_b[b(w)] = one.clone();
    }
    push("Σ A⊥ = 2^(n-k)".into(), sum_a, Sense::Eq, pow2(n - k));
    let mut sum_big_a = zero();
    let mut sum_big_b = zero();
    for w in 0..=n {
        for (x, y) in sum_big_a.iter_mut().zip(big_a(w)) {
            *x += y;
        }
        for (x, y) in sum_big_b.iter_mut().zip(big_b(w)) {
            *x += y;
        }
    }
    push("Σ A = 2^(n+k)".into(), sum_big_a, Sense::Eq, &scale * pow2(n + k));
    push("Σ B⊥ = 2^(n-k-m)".into(), sum_b, Sense::Eq, pow2(n - k - m));
    push("Σ B = 2^(n+k+m)".into(), sum_big_b, Sense::Eq, &scale * pow2(n + k + m));
    for w in 0..=n {
        push(
            format!("B⊥_{w} ≤ A⊥_{w}"),
            sub(unit(b(w), &one), unit(a(w), &one)),
            Sense::Le,
            BigInt::zero(),
        );
        let (rel, sense) = if (1..d).contains(&w) { ("=", Sense::Eq) } else { ("≤", Sense::Le) };
        push(
            format!("A⊥_{w} {rel} A_{w}"),
            sub(unit(a(w), &scale), big_a(w)),
            sense,
            BigInt::zero(),
        );
        push(format!("A_{w} {rel} B_{w}"), sub(big_a(w), big_b(w)), sense, BigInt::zero());
    }
    if qy.use_shadow {
        for w in 0..=n {
            let mut c = zero();
            for j in 0..=n {
                c[a(j)] = if j % 2 == 1 { -&kr[w][j] } else { kr[w][j].clone() };
            }
            push(format!("S_{w} ≥ 0"), c, Sense::Ge, BigInt::zero());
        }
    }

    let mut forms = Vec::new();
    for w in 0..=n {
        forms.push((format!("A_{w}"), IntegralForm { coeffs: big_a(w), scale: scale.clone() }));
    }
    for w in 0..=n {
        forms.push((format!("B_{w}"), IntegralForm { coeffs: big_b(w), scale: scale.clone() }));
    }
    if qy.use_shadow {
        for w in 0..=n {
            let mut c = zero();
            for j in 0..=n {
                c[a(j)] = if j % 2 == 1 { -&kr[w][j] } else { kr[w][j].clone() };
            }
            forms.push((format!("S_{w}"), IntegralForm { coeffs: c, scale: scale.clone() }));
        }
    }
    // K[0][j] = 1 and Σ_w K[w][j] = 4^n δ_j0, so the transformed
    // normalizations and sums follow from A⊥_0, B⊥_0 and the two plain sums;
    // the w = 0 chain links then read 1 ≤ 1.
    for c in &mut cs {
        c.implied = matches!(
            c.name.as_str(),
            "A_0 = 1" | "B_0 = 1" | "Σ A = 2^(n+k)" | "Σ B = 2^(n+k+m)" | "B⊥_0 ≤ A⊥_0" | "A⊥_0 ≤ A_0" | "A_0 ≤ B_0"
        );
    }
    Ok(EnumeratorProgram {
        query: qy,
        num_vars: nv,
        constraints: cs,
        integral_forms: forms,
    })
}

impl EnumeratorProgram {
    /// The non-implied constraints as solver rows.
    pub(crate) fn rows(&self) -> Vec<Row> {
        self.constraints
            .iter()
            .filter(|c| !c.implied)
            .map(|c| match c.sense {
                Sense::Ge => Row {
                    coeffs: c.coeffs.iter().map(|x| -x).collect(),
                    rhs: -&c.rhs,
                    equality: false,
                },
                sense => Row {
                    coeffs: c.coeffs.clone(),
                    rhs: c.rhs.clone(),
                    equality: sense == Sense::Eq,
                },
            })
            .collect()
    }

    /// Names of the constraints violated by `point` under exact evaluation of
    /// the stored rows.
    pub fn violated(&self, point: &[BigRational]) -> Vec<String> {
        let mut out = Vec::new();
        for c in &self.constraints {
            let lhs: BigRational = c
                .coeffs
                .iter()
                .zip(point)
                .map(|(a, x)| BigRational::from_integer(a.clone()) * x)
                .sum();
            let rhs = BigRational::from_integer(c.rhs.clone());
            let ok = match c.sense {
                Sense::Le => lhs <= rhs,
                Sense::Ge => lhs >= rhs,
                Sense::Eq => lhs == rhs,
            };
            if !ok {
                out.push(c.name.clone());
            }
        }
        if point.iter().any(|x| x.is_negative()) {
            out.push("nonnegativity".into());
        }
        out
    }
}

/// Independent check of a candidate `(A⊥, B⊥)` against the defining
/// relations, recomputing `A`, `B` and the shadow directly. Returns the names
/// of the violated relations (empty when the point is feasible).
pub fn check_point(qy: &BoundQuery, a_perp: &[BigRational], b_perp: &[BigRational], integral: bool) -> Vec<String> {
    let BoundQuery { n, k, m, d, .. } = *qy;
    let mut bad = Vec::new();
    if a_perp.len() != n + 1 || b_perp.len() != n + 1 {
        bad.push("length".into());
        return bad;
    }
    let r = |x: BigInt| BigRational::from_integer(x);
    let kr = krawtchouk_matrix(n);
    let transform = |v: &[BigRational], size: BigInt, alt: bool| -> Vec<BigRational> {
        (0..=n)
            .map(|w| {
                let mut s = BigRational::zero();
                for j in 0..=n {
                    let t = r(kr[w][j].clone()) * &v[j];
                    if alt && j % 2 == 1 {
                        s -= t;
                    } else {
                        s += t;
                    }
                }
                s / r(size.clone())
            })
            .collect()
    };
    let big_a = transform(a_perp, pow2(n - k), false);
    let big_b = transform(b_perp, pow2(n - k - m), false);
    let one = BigRational::one();
    let mut need = |cond: bool, name: String| {
        if !cond {
            bad.push(name);
        }
    };
    need(a_perp[0] == one, "A⊥_0 = 1".into());
    need(big_a[0] == one, "A_0 = 1".into());
    need(big_b[0] == one, "B_0 = 1".into());
    need(b_perp[0] == one, "B⊥_0 = 1".into());
    let total = |v: &[BigRational]| v.iter().fold(BigRational::zero(), |s, x| s + x);
    need(total(a_perp) == r(pow2(n - k)), "Σ A⊥ = 2^(n-k)".into());
    need(total(&big_a) == r(pow2(n + k)), "Σ A = 2^(n+k)".into());
    need(total(b_perp) == r(pow2(n - k - m)), "Σ B⊥ = 2^(n-k-m)".into());
    need(total(&big_b) == r(pow2(n + k + m)), "Σ B = 2^(n+k+m)".into());
    for w in 0..=n {
        need(!b_perp[w].is_negative(), format!("B⊥_{w} ≥ 0"));
        need(b_perp[w] <= a_perp[w], format!("B⊥_{w} ≤ A⊥_{w}"));
        need(a_perp[w] <= big_a[w], format!("A⊥_{w} ≤ A_{w}"));
        need(big_a[w] <= big_b[w], format!("A_{w} ≤ B_{w}"));
        if (1..d).contains(&w) {
            need(a_perp[w] == big_a[w] && big_a[w] == big_b[w], format!("A⊥_{w} = A_{w} = B_{w}"));
        }
        if integral {
            for (label, v) in [("A⊥", &a_perp[w]), ("B⊥", &b_perp[w]), ("A", &big_a[w]), ("B", &big_b[w])] {
                need(v.is_integer(), format!("{label}_{w} integral"));
            }
        }
    }
    if qy.use_shadow {
        let s = transform(a_perp, pow2(n - k), true);
        for (w, x) in s.iter().enumerate() {
            need(!x.is_negative(), format!("S_{w} ≥ 0"));
            if integral {
                need(x.is_integer(), format!("S_{w} integral"));
            }
        }
    }
    bad
}
