//! Integer lattices cut out by congruences, with bases adapted to a set of
//! equality rows. Branching on lattice coordinates instead of raw variables
//! lets the search step between points that already satisfy every
//! congruence.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::simplex::IntegralForm;

type Vector = Vec<BigInt>;

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn combine(x: &BigInt, a: &[BigInt], y: &BigInt, b: &[BigInt]) -> Vector {
    a.iter().zip(b).map(|(p, q)| x * p + y * q).collect()
}

/// Unimodular update of columns `p` and `j` so that `vals[j]` becomes zero
/// and `vals[p]` the gcd of both.
fn eliminate(cols: &mut [Vector], vals: &mut [BigInt], p: usize, j: usize) {
    if vals[j].is_zero() {
        return;
    }
    if vals[p].is_zero() {
        cols.swap(p, j);
        vals.swap(p, j);
        return;
    }
    let (g, v) = (vals[p].clone(), vals[j].clone());
    let e = g.extended_gcd(&v);
    let h = e.gcd;
    let new_p = combine(&e.x, &cols[p], &e.y, &cols[j]);
    let new_j = combine(&(&v / &h), &cols[p], &-(&g / &h), &cols[j]);
    cols[p] = new_p;
    cols[j] = new_j;
    vals[p] = h;
    vals[j] = BigInt::zero();
}

/// Basis of `{x ∈ Zⁿ : f·x ≡ 0 (mod s)}` over all forms.
pub(crate) fn congruence_basis(n: usize, forms: &[IntegralForm]) -> Vec<Vector> {
    let mut cols: Vec<Vector> = (0..n)
        .map(|i| {
            let mut v = vec![BigInt::zero(); n];
            v[i] = BigInt::one();
            v
        })
        .collect();
    for f in forms {
        let s = &f.scale;
        let mut vals: Vec<BigInt> = cols.iter().map(|c| dot(&f.coeffs, c).mod_floor(s)).collect();
        for j in 1..n {
            eliminate(&mut cols, &mut vals, 0, j);
            vals[0] = vals[0].mod_floor(s);
        }
        if !vals[0].is_zero() {
            let factor = s / vals[0].gcd(s);
            cols[0] = cols[0].iter().map(|x| x * &factor).collect();
        }
        lll(&mut cols);
    }
    cols
}

/// Reorders the lattice basis as `[complement | kernel]`, where the kernel
/// block spans the lattice points with `e·x = 0` for every row `e`. Returns
/// the size of the complement block.
pub(crate) fn adapt_to_kernel(mut cols: Vec<Vector>, equalities: &[Vector]) -> (Vec<Vector>, usize) {
    let mut r = 0;
    for e in equalities {
        let mut vals: Vec<BigInt> = cols.iter().map(|c| dot(e, c)).collect();
        if vals[r..].iter().all(|v| v.is_zero()) {
            continue;
        }
        for j in r + 1..cols.len() {
            eliminate(&mut cols, &mut vals, r, j);
        }
        r += 1;
    }
    lll(&mut cols[r..]);
    (cols, r)
}

/// LLL reduction (δ = 3/4) guided by floating-point Gram–Schmidt; every update
/// is an exact unimodular operation on the integer vectors.
pub(crate) fn lll(b: &mut [Vector]) {
    let n = b.len();
    if n < 2 {
        return;
    }
    let to_f = |v: &Vector| -> Vec<f64> { v.iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect() };
    let fdot = |a: &[f64], c: &[f64]| -> f64 { a.iter().zip(c).map(|(x, y)| x * y).sum() };
    let gram_schmidt = |b: &[Vector], upto: usize| -> (Vec<Vec<f64>>, Vec<f64>, Vec<Vec<f64>>) {
        let mut star: Vec<Vec<f64>> = Vec::with_capacity(upto + 1);
        let mut norms = Vec::with_capacity(upto + 1);
        let mut mu = vec![vec![0.0; upto + 1]; upto + 1];
        for i in 0..=upto {
            let bi = to_f(&b[i]);
            let mut v = bi.clone();
            for j in 0..i {
                mu[i][j] = if norms[j] > 0.0 { fdot(&bi, &star[j]) / norms[j] } else { 0.0 };
                for (x, y) in v.iter_mut().zip(&star[j]) {
                    *x -= mu[i][j] * y;
                }
            }
            norms.push(fdot(&v, &v));
            star.push(v);
        }
        (star, norms, mu)
    };
    let mut k = 1;
    let mut steps = 0;
    while k < n && steps < 100_000 {
        steps += 1;
        let (_, _, mu) = gram_schmidt(b, k);
        let mut mu_k = mu[k].clone();
        for j in (0..k).rev() {
            let q = mu_k[j].round();
            if q != 0.0 {
                let qb = BigInt::from(q as i64);
                b[k] = b[k].iter().zip(&b[j]).map(|(x, y)| x - &qb * y).collect();
                for i in 0..j {
                    mu_k[i] -= q * mu[j][i];
                }
                mu_k[j] -= q;
            }
        }
        let (_, norms, mu) = gram_schmidt(b, k);
        if norms[k] >= (0.75 - mu[k][k - 1] * mu[k][k - 1]) * norms[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
}

/// Coordinate functionals of the basis: form `i` maps `x = Σ yⱼ bⱼ` to `yᵢ`.
pub(crate) fn coordinate_forms(cols: &[Vector]) -> Vec<IntegralForm> {
    let n = cols.len();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = cols.iter().map(|c| BigRational::from_integer(c[i].clone())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("lattice basis is nonsingular");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    m.into_iter()
        .map(|row| {
            let inv = &row[n..];
            let scale = inv.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            let coeffs = inv.iter().map(|x| (x * BigRational::from_integer(scale.clone())).to_integer()).collect();
            IntegralForm { coeffs, scale }
        })
        .collect()
}

/// Lattice coordinates for a program: the complement block first (constant
/// on the equality subspace), then the kernel block.
pub(crate) fn lattice_forms(n: usize, forms: &[IntegralForm], equalities: &[Vector]) -> (Vec<IntegralForm>, usize) {
    let basis = congruence_basis(n, forms);
    let (basis, r) = adapt_to_kernel(basis, equalities);
    (coordinate_forms(&basis), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn big(v: &[i64]) -> Vector {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn in_lattice(x: &[i64], forms: &[IntegralForm]) -> bool {
        forms.iter().all(|f| dot(&f.coeffs, &big(x)).is_multiple_of(&f.scale))
    }

    #[test]
    fn congruence_lattice_matches_enumeration() {
        let forms = vec![
            IntegralForm { coeffs: big(&[1, 3, 0]), scale: BigInt::from(4) },
            IntegralForm { coeffs: big(&[0, 1, 1]), scale: BigInt::from(2) },
        ];
        let basis = congruence_basis(3, &forms);
        let coords = coordinate_forms(&basis);
        for a in -4i64..=4 {
            for b in -4i64..=4 {
                for c in -4i64..=4 {
                    let x = [a, b, c];
                    let expected = in_lattice(&x, &forms);
                    let got = coords.iter().all(|f| dot(&f.coeffs, &big(&x)).is_multiple_of(&f.scale));
                    assert_eq!(got, expected, "{x:?}");
                }
            }
        }
        for v in &basis {
            assert!(forms.iter().all(|f| dot(&f.coeffs, v).is_multiple_of(&f.scale)));
        }
    }

    #[test]
    fn kernel_block_satisfies_equalities() {
        let basis = congruence_basis(4, &[IntegralForm { coeffs: big(&[1, 1, 1, 1]), scale: BigInt::from(2) }]);
        let eq = vec![big(&[1, 1, 0, 0]), big(&[0, 0, 2, 1])];
        let (cols, r) = adapt_to_kernel(basis, &eq);
        assert_eq!(r, 2);
        for c in &cols[r..] {
            assert!(eq.iter().all(|e| dot(e, c).is_zero()));
        }
        let forms = coordinate_forms(&cols);
        for (i, c) in cols.iter().enumerate() {
            for (j, f) in forms.iter().enumerate() {
                let expect = BigInt::from((i == j) as i64) * &f.scale;
                assert_eq!(dot(&f.coeffs, c), expect);
            }
        }
    }

    #[test]
    fn reduction_keeps_the_lattice() {
        let mut b = vec![big(&[1, 0, 0]), big(&[4, 1, 0]), big(&[7, 3, 1])];
        lll(&mut b);
        let det = |b: &[Vector]| {
            let m = |i: usize, j: usize| b[j][i].clone();
            m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
        };
        assert_eq!(det(&b).abs(), BigInt::one());
        assert!(b.iter().all(|v| v.iter().all(|x| x.abs() <= BigInt::one())));
    }
}
