//! Exact weight enumerators, MacWilliams and shadow transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::additive::AdditiveCode;
use crate::error::{Error, Result};
use crate::par::{self, Execution};

/// Coefficients `A_0..A_n` of `Σ A_w X^{n-w} Y^w`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    pub n: usize,
    pub coeffs: Vec<BigInt>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        WeightEnumerator {
            n: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `Σ_w A_w`, the number of codewords for a genuine enumerator.
    pub fn total(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Decimal strings, the JSON export form.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(|c| c.to_string()).collect()
    }

    /// Polynomial in `X`, `Y`, e.g. `X^7 + X^5Y^2 + 2X^4Y^3`.
    pub fn to_polynomial(&self) -> String {
        let n = self.n;
        let mut terms = Vec::new();
        for (w, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut mono = String::new();
            match n - w {
                0 => {}
                1 => mono.push('X'),
                e => mono.push_str(&format!("X^{e}")),
            }
            match w {
                0 => {}
                1 => mono.push('Y'),
                e => mono.push_str(&format!("Y^{e}")),
            }
            let coeff = if c.is_one() && !mono.is_empty() {
                String::new()
            } else if *c == -BigInt::one() && !mono.is_empty() {
                "-".into()
            } else {
                c.to_string()
            };
            terms.push(format!("{coeff}{mono}"));
        }
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ").replace("+ -", "- ")
        }
    }
}

impl Serialize for WeightEnumerator {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_decimal_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightEnumerator {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs = Vec::<String>::deserialize(d)?;
        if strs.is_empty() {
            return Err(serde::de::Error::custom("empty enumerator"));
        }
        let coeffs = strs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(WeightEnumerator::new(coeffs))
    }
}

/// Exact enumerator of `code` by walking its span.
pub fn weight_enumerator(code: &AdditiveCode, cap: usize, exec: Execution) -> Result<WeightEnumerator> {
    code.check_cap(cap)?;
    let n = code.n();
    let hist = par::map_reduce_range(
        exec,
        1u64 << code.rank(),
        vec![0u64; n + 1],
        |range| {
            let mut h = vec![0u64; n + 1];
            for v in code.span_range(range) {
                h[v.weight()] += 1;
            }
            h
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    Ok(WeightEnumerator::new(hist.into_iter().map(BigInt::from).collect()))
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Quaternary Krawtchouk matrix `K[w][j]`: the coefficient of `X^{n-w} Y^w`
/// in `(X + 3Y)^{n-j} (X - Y)^j`.
pub fn krawtchouk_matrix(n: usize) -> Vec<Vec<BigInt>> {
    let three = BigInt::from(3);
    (0..=n)
        .map(|w| {
            (0..=n)
                .map(|j| {
                    let mut sum = BigInt::zero();
                    for s in 0..=w.min(j) {
                        if w - s > n - j {
                            continue;
                        }
                        let term = binomial(j, s)
                            * binomial(n - j, w - s)
                            * num_traits::pow(three.clone(), w - s);
                        if s % 2 == 1 {
                            sum -= term;
                        } else {
                            sum += term;
                        }
                    }
                    sum
                })
                .collect()
        })
        .collect()
}

fn transform(w: &WeightEnumerator, source_size: &BigInt, q: u32, alternate: bool) -> Result<WeightEnumerator> {
    if q != 2 {
        return Err(Error::UnsupportedAlphabet(q));
    }
    if source_size.is_zero() || source_size.is_negative() {
        return Err(Error::Inconsistent("source size must be positive".into()));
    }
    let k = krawtchouk_matrix(w.n);
    let mut out = Vec::with_capacity(w.n + 1);
    for (row, kw) in k.iter().enumerate() {
        let mut acc = BigInt::zero();
        for (j, (kwj, aj)) in kw.iter().zip(&w.coeffs).enumerate() {
            if alternate && j % 2 == 1 {
                acc -= kwj * aj;
            } else {
                acc += kwj * aj;
            }
        }
        let (quot, rem) = acc.div_rem(source_size);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(format!(
                "coefficient {row} is not an integer after dividing by {source_size}"
            )));
        }
        out.push(quot);
    }
    Ok(WeightEnumerator::new(out))
}

/// `(1/|C|) W_C(X + 3Y, X - Y)`, the enumerator of the symplectic dual.
pub fn macwilliams(w: &WeightEnumerator, source_size: &BigInt, q: u32) -> Result<WeightEnumerator> {
    transform(w, source_size, q, false)
}

/// `(1/|C|) W_C(X + 3Y, Y - X)`. Coefficients of a genuine qubit code are
/// nonnegative integers; checking the sign is left to the caller.
pub fn shadow(w: &WeightEnumerator, source_size: &BigInt, q: u32) -> Result<WeightEnumerator> {
    transform(w, source_size, q, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    /// Expands (X+3Y)^{n-j}(X-Y)^j by repeated polynomial multiplication.
    fn expand(n: usize, j: usize, sign: i64) -> Vec<i64> {
        // coefficients indexed by power of Y
        let mut poly = vec![1i64];
        let mul = |p: &Vec<i64>, a: i64, b: i64| {
            let mut out = vec![0i64; p.len() + 1];
            for (i, c) in p.iter().enumerate() {
                out[i] += c * a;
                out[i + 1] += c * b;
            }
            out
        };
        for _ in 0..n - j {
            poly = mul(&poly, 1, 3);
        }
        for _ in 0..j {
            poly = mul(&poly, sign, -sign);
        }
        poly
    }

    #[test]
    fn krawtchouk_matches_polynomial_expansion() {
        for n in 1..=9 {
            let k = krawtchouk_matrix(n);
            for j in 0..=n {
                let poly = expand(n, j, 1);
                for w in 0..=n {
                    assert_eq!(k[w][j], BigInt::from(poly[w]), "n={n} w={w} j={j}");
                }
            }
            // column sums: (1+3)^{n-j} (1-1)^j
            for j in 0..=n {
                let s: BigInt = (0..=n).map(|w| k[w][j].clone()).sum();
                let expect = if j == 0 { BigInt::from(4).pow(n as u32) } else { BigInt::zero() };
                assert_eq!(s, expect);
            }
        }
    }

    #[test]
    fn stabilizer_enumerator_transforms_to_normalizer() {
        let d = catalog::code("7_1_1_3").unwrap().validate().unwrap();
        let w0 = weight_enumerator(&d.c0, 30, Execution::default()).unwrap();
        assert_eq!(w0, WeightEnumerator::from_i64(&[1, 0, 1, 2, 7, 24, 23, 6]));
        let dual = macwilliams(&w0, &BigInt::from(64), 2).unwrap();
        assert_eq!(dual, WeightEnumerator::from_i64(&[1, 0, 1, 20, 43, 72, 83, 36]));
    }

    #[test]
    fn dual_of_zero_code_is_full_space() {
        let n = 5;
        let mut c = vec![0i64; n + 1];
        c[0] = 1;
        let full = macwilliams(&WeightEnumerator::from_i64(&c), &BigInt::one(), 2).unwrap();
        for w in 0..=n {
            assert_eq!(full.coeffs[w], binomial(n, w) * BigInt::from(3).pow(w as u32));
        }
    }

    #[test]
    fn wrong_source_size_is_inconsistent() {
        let w0 = WeightEnumerator::from_i64(&[1, 0, 1, 2, 7, 24, 23, 6]);
        assert!(matches!(
            macwilliams(&w0, &BigInt::from(63), 2),
            Err(Error::Inconsistent(_))
        ));
        assert!(matches!(
            macwilliams(&w0, &BigInt::from(64), 3),
            Err(Error::UnsupportedAlphabet(3))
        ));
    }

    #[test]
    fn shadow_of_printed_stabilizer_is_nonnegative() {
        let w0 = WeightEnumerator::from_i64(&[1, 0, 1, 2, 7, 24, 23, 6]);
        let s = shadow(&w0, &BigInt::from(64), 2).unwrap();
        assert!(s.is_nonnegative(), "{s:?}");
        let z = WeightEnumerator::from_i64(&[1, 1]);
        assert_eq!(shadow(&z, &BigInt::from(2), 2).unwrap(), WeightEnumerator::from_i64(&[0, 2]));
    }

    #[test]
    fn polynomial_rendering() {
        let w = WeightEnumerator::from_i64(&[1, 0, 1, 2, 7, 24, 23, 6]);
        assert_eq!(
            w.to_polynomial(),
            "X^7 + X^5Y^2 + 2X^4Y^3 + 7X^3Y^4 + 24X^2Y^5 + 23XY^6 + 6Y^7"
        );
    }

    #[test]
    fn json_is_decimal_strings() {
        let w = WeightEnumerator::from_i64(&[1, 0, 3]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"["1","0","3"]"#);
        let back: WeightEnumerator = serde_json::from_str(&s).unwrap();
        assert_eq!(back, w);
    }
}
