//! Built-in hybrid codes, transcribed row by row from their published
//! generator matrices.

use crate::code::HybridCode;
use crate::error::{Error, Result};
use crate::pauli::PauliVector;

/// A generator matrix as printed: stabilizer rows, normalizer rows (between
/// the single and double rule) and translation rows.
#[derive(Debug, Clone, Copy)]
pub struct PrintedMatrix {
    pub name: &'static str,
    pub n: usize,
    pub claimed_d: usize,
    pub stabilizer: &'static [&'static str],
    pub normalizer: &'static [&'static str],
    pub translations: &'static [&'static str],
}

const STAB_11_1_2_4: [&str; 10] = [
    "XXIIIIZZXIZ",
    "ZIIIIIIIIIX",
    "IZIIIIIIIIX",
    "IIXIIZIXZII",
    "IIZIIIIIXII",
    "IIIXIZYZXYX",
    "IIIZIIIIIXI",
    "IIIIXZZIIXI",
    "IIIIZZXXIII",
    "IIIIIYXYIXI",
];

const STAB_13_1_4_4: [&str; 12] = [
    "XXIIIIZZXIZII",
    "ZIIIIIIIIIXII",
    "IZIIIIIIIIXII",
    "IIXIIZIXZIIII",
    "IIZIIIIIXIIII",
    "IIIXIZYZXYXII",
    "IIIZIIIIIXIII",
    "IIIIXZZIIXIII",
    "IIIIZZXXIIIII",
    "IIIIIYXYIXIII",
    "IIIIIIIIIIIZI",
    "IIIIIIIIIIIIZ",
];

pub const PRINTED: [PrintedMatrix; 6] = [
    PrintedMatrix {
        name: "7_1_1_3",
        n: 7,
        claimed_d: 3,
        stabilizer: &["XIIZYYZ", "ZIIIIIX", "IXIXZII", "IZIZIXX", "IIXXIZI", "IIZZXIX"],
        normalizer: &["IIIXZZX", "IIIZXXI"],
        translations: &["IIIIXYY"],
    },
    PrintedMatrix {
        name: "9_2_2_3",
        n: 9,
        claimed_d: 3,
        stabilizer: &[
            "XIIZYZXXY",
            "ZIIIIXIII",
            "IXIZYIYIZ",
            "IZIIIIXII",
            "IIXZZIIIX",
            "IIZIYXIYI",
            "IIIXXXIZI",
        ],
        normalizer: &["IIIZIIXYX", "IIIIXIIZY", "IIIIZIIXX", "IIIIIXXIX"],
        translations: &["IIIIIZIZX", "IIIIIIYXZ"],
    },
    PrintedMatrix {
        name: "10_3_2_3",
        n: 10,
        claimed_d: 3,
        stabilizer: &[
            "XIXYIXZXXY",
            "ZIIIIIIIIX",
            "IXXXIYXYZX",
            "IZIIIIIIXI",
            "IIZZIIIIII",
            "IIIIXXYYII",
            "IIIIZZXXII",
        ],
        normalizer: &[
            "IIXXIIIIIX",
            "IIIZIIIIXX",
            "IIIIIXIYXX",
            "IIIIIZIXIX",
            "IIIIIIXXXX",
            "IIIIIIZZIX",
        ],
        translations: &["IIIXIIIZXY", "IIIIIIIYYZ"],
    },
    PrintedMatrix {
        name: "11_1_2_4",
        n: 11,
        claimed_d: 4,
        stabilizer: &STAB_11_1_2_4,
        normalizer: &["IIIIIZIXIXX", "IIIIIIZZXXI"],
        translations: &["IXIIIIIXYZI", "IIIIIIXIXYZ"],
    },
    PrintedMatrix {
        name: "11_4_2_3",
        n: 11,
        claimed_d: 3,
        stabilizer: &[
            "XXIXXYYZYIY",
            "ZIIIIIIIXII",
            "IZIIIIIIXII",
            "IIXIXZIZIXX",
            "IIZXIIZXIYY",
            "IIIZXXZXIXI",
            "IIIIZZYXIYZ",
        ],
        normalizer: &[
            "IIIXIIIZIXI",
            "IIIIXIIZIZY",
            "IIIIIXIIIXZ",
            "IIIIIZIZIIX",
            "IIIIIIXZIXX",
            "IIIIIIZZIYZ",
            "IIIIIIIYIYX",
            "IIIIIIIIXXX",
        ],
        translations: &["IXIIIIIIZYY", "IIIIIIIZZXZ"],
    },
    PrintedMatrix {
        name: "13_1_4_4",
        n: 13,
        claimed_d: 4,
        stabilizer: &STAB_13_1_4_4,
        normalizer: &["IIIIIZIXIXXII", "IIIIIIZZXXIII"],
        translations: &[
            "IXIIIIIIXYXXX",
            "IIIIIIXIXIIXX",
            "IIIIIIIXYXYXX",
            "IIIIIIIXIYYXI",
        ],
    },
];

/// Names of all catalog codes.
pub fn names() -> Vec<&'static str> {
    PRINTED.iter().map(|p| p.name).collect()
}

pub fn printed(name: &str) -> Result<&'static PrintedMatrix> {
    PRINTED
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| Error::UnknownCode {
            name: name.to_string(),
            valid: names().into_iter().map(String::from).collect(),
        })
}

fn rows(strs: &[&str]) -> Vec<PauliVector> {
    strs.iter()
        .map(|s| s.parse().expect("catalog rows are valid Pauli strings"))
        .collect()
}

/// The catalog code `name` (e.g. `"7_1_1_3"`).
pub fn code(name: &str) -> Result<HybridCode> {
    let p = printed(name)?;
    Ok(HybridCode::from_normalizer(
        p.n,
        rows(p.stabilizer),
        &rows(p.normalizer),
        rows(p.translations),
    )?
    .with_claimed_d(Some(p.claimed_d)))
}

/// All catalog codes in catalog order.
pub fn all() -> Vec<(&'static str, HybridCode)> {
    PRINTED
        .iter()
        .map(|p| (p.name, code(p.name).expect("catalog codes build")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn weights(rows: &[&str]) -> Vec<usize> {
        rows.iter().map(|r| r.chars().filter(|&c| c != 'I').count()).collect()
    }

    // Row counts and per-row weights, counted from the printed matrices.
    #[test]
    fn transcription_checksums() {
        let expect: [(&str, [Vec<usize>; 3]); 6] = [
            ("7_1_1_3", [vec![5, 2, 3, 4, 3, 4], vec![4, 3], vec![3]]),
            (
                "9_2_2_3",
                [vec![7, 2, 5, 2, 4, 4, 4], vec![4, 3, 3, 3], vec![3, 3]],
            ),
            (
                "10_3_2_3",
                [vec![8, 2, 8, 2, 2, 4, 4], vec![3, 3, 4, 3, 4, 3], vec![4, 3]],
            ),
            (
                "11_1_2_4",
                [vec![6, 2, 2, 4, 2, 7, 2, 4, 4, 4], vec![4, 4], vec![4, 4]],
            ),
            (
                "11_4_2_3",
                [
                    vec![9, 2, 2, 6, 6, 6, 6],
                    vec![3, 4, 3, 3, 4, 4, 3, 3],
                    vec![4, 4],
                ],
            ),
            (
                "13_1_4_4",
                [
                    vec![6, 2, 2, 4, 2, 7, 2, 4, 4, 4, 1, 1],
                    vec![4, 4],
                    vec![6, 4, 6, 4],
                ],
            ),
        ];
        for (name, [s, l, t]) in expect {
            let p = printed(name).unwrap();
            assert_eq!(weights(p.stabilizer), s, "{name} stabilizer");
            assert_eq!(weights(p.normalizer), l, "{name} normalizer");
            assert_eq!(weights(p.translations), t, "{name} translations");
            for r in p.stabilizer.iter().chain(p.normalizer).chain(p.translations) {
                assert_eq!(r.len(), p.n);
            }
        }
    }

    #[test]
    fn parameters_match_names() {
        for (name, h) in all() {
            let parts: Vec<usize> = name.split('_').map(|s| s.parse().unwrap()).collect();
            assert_eq!((h.n(), h.k(), h.m()), (parts[0], parts[1], parts[2]), "{name}");
            assert_eq!(h.claimed_d(), Some(parts[3]));
        }
    }

    #[test]
    fn every_catalog_code_validates() {
        for (name, h) in all() {
            let d = h.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
            let (n, k, m) = (h.n(), h.k(), h.m());
            assert_eq!(d.ranks(), (n - k - m, n - k, n + k, n + k + m), "{name}");
            for t in h.translations() {
                assert!(!d.c0_star.contains(t).unwrap(), "{name}");
            }
        }
    }

    #[test]
    fn thirteen_qubit_stabilizer_extends_eleven_qubit_one() {
        let s13 = printed("13_1_4_4").unwrap().stabilizer;
        for (a, b) in STAB_11_1_2_4.iter().zip(s13) {
            assert_eq!(format!("{a}II"), *b);
        }
        assert_eq!(&s13[10..], &["IIIIIIIIIIIZI", "IIIIIIIIIIIIZ"]);
    }

    #[test]
    fn unknown_name_lists_valid_names() {
        match code("5_1_0_3") {
            Err(Error::UnknownCode { valid, .. }) => assert_eq!(valid.len(), 6),
            other => panic!("unexpected {other:?}"),
        }
    }
}
