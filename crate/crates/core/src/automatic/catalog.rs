//! Named morphisms and codings.
//!
//! `g`, `g₃` and `g₄` are read off `ρ(μ^ω(0))`; the `(fₗ, gₗ)` pairs code the
//! P-positions of `K^ℓ` as words over `{a, b}`.

use super::{promote, Coding, Dfao, FibLetter, Morphism};

pub const G_MORPHISM: &str = "0 -> 01, 1 -> 2, 2 -> 31, 3 -> 45, 4 -> 35, 5 -> 4";
pub const G_CODING: &str = "0,2,3,5 -> 1; 1,4 -> 0";

pub const G3_MORPHISM: &str = "0 -> 01, 1 -> 2, 2 -> 34, 3 -> 56, 4 -> 7, 5 -> 78, \
     6 -> 9, 7 -> ab, 8 -> a, 9 -> 56, a -> ab, b -> 7";
pub const G3_CODING: &str = "0,3,5,6,8,a,b -> 1; 1,2,7,9 -> 2; 4 -> 0";

pub const G4_MORPHISM: &str =
    "0 -> 01, 1 -> 2, 2 -> 34, 3 -> 56, 4 -> 7, 5 -> 89, 6 -> a, 7 -> bc, 8 -> dc, \
     9 -> d, a -> ef, b -> ef, c -> e, d -> 7g, e -> eh, f -> b, g -> d, h -> b";
pub const G4_CODING: &str = "0,3,7,8,9,b,c,d,e,h -> 1; 1,2,a -> 2; 4,5,6,f,g -> 0";

pub const F1_MORPHISM: &str = "0 -> 01, 1 -> 2, 2 -> 34, 3 -> 31, 4 -> 2";
/// Output 1 stands for `a`, 2 for `b`.
pub const F1_CODING: &str = "0,1,3 -> 1; 2,4 -> 2";

pub const F2_MORPHISM: &str = "0 -> 01, 1 -> 2, 2 -> 34, 3 -> 56, 4 -> 7, 5 -> 89, 6 -> (10), \
     7 -> (11)(12), 8 -> (10)(13), 9 -> (14), (10) -> (10)(13), (11) -> 56, (12) -> (15), \
     (13) -> 5, (14) -> 89, (15) -> (11)(12)";
pub const F2_CODING: &str = "0,1,2,4,6,8,9,11,12,13,14,15 -> 1; 3,5,7,10 -> 2";

pub const F3_MORPHISM: &str = "0 -> 01, 1 -> 2, 2 -> 34, 3 -> 56, 4 -> 7, 5 -> 89, 6 -> (10), \
     7 -> (11)(12), 8 -> (13)(12), 9 -> (14), (10) -> (15)(16), (11) -> (14)(17), (12) -> (18), \
     (13) -> (14)(17), (14) -> (19)(12), (15) -> (18)(20), (16) -> (21), (17) -> (18), \
     (18) -> (13)(12), (19) -> (19)(12), (20) -> (14), (21) -> (15)(16)";
pub const F3_CODING: &str = "0,1,2,3,5,7,9,11,12,14,16,18,21 -> 1; 4,6,8,10,13,15,17,19,20 -> 2";

/// Sequences available by name, with their morphism and coding text.
pub const NAMED: &[(&str, &str, &str)] = &[
    ("g", G_MORPHISM, G_CODING),
    ("g3", G3_MORPHISM, G3_CODING),
    ("g4", G4_MORPHISM, G4_CODING),
    ("f1g1", F1_MORPHISM, F1_CODING),
    ("f2g2", F2_MORPHISM, F2_CODING),
    ("f3g3", F3_MORPHISM, F3_CODING),
];

fn load(morphism: &str, coding: &str) -> (Morphism, Coding<u32>) {
    let m = Morphism::parse(morphism).expect("catalog morphism parses");
    let c = Coding::parse(coding).expect("catalog coding parses");
    (m, c)
}

pub fn g() -> (Morphism, Coding<u32>) {
    load(G_MORPHISM, G_CODING)
}

pub fn g3() -> (Morphism, Coding<u32>) {
    load(G3_MORPHISM, G3_CODING)
}

pub fn g4() -> (Morphism, Coding<u32>) {
    load(G4_MORPHISM, G4_CODING)
}

/// Morphism and `{a, b}` coding for `K^ℓ`, `ℓ ∈ {1, 2, 3}`.
pub fn ab_coding(ell: u32) -> Option<(Morphism, Coding<FibLetter>)> {
    let (m, c) = match ell {
        1 => load(F1_MORPHISM, F1_CODING),
        2 => load(F2_MORPHISM, F2_CODING),
        3 => load(F3_MORPHISM, F3_CODING),
        _ => return None,
    };
    Some((m, to_ab(&c)))
}

/// Reads outputs `1`/`2` as `a`/`b`.
pub fn to_ab(c: &Coding<u32>) -> Coding<FibLetter> {
    Coding::new(
        c.outputs()
            .iter()
            .map(|&o| if o == 1 { FibLetter::A } else { FibLetter::B })
            .collect(),
    )
}

/// Automaton for a name in [`NAMED`].
pub fn named_dfao(name: &str) -> Option<Dfao> {
    NAMED.iter().find(|(n, _, _)| *n == name).map(|(_, m, c)| {
        let (m, c) = load(m, c);
        promote(&m, &c).expect("catalog morphisms are φ-morphisms")
    })
}

pub fn g_dfao() -> Dfao {
    named_dfao("g").unwrap()
}

pub fn g3_dfao() -> Dfao {
    named_dfao("g3").unwrap()
}

pub fn g4_dfao() -> Dfao {
    named_dfao("g4").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automatic::{commutes_with_fibonacci, structural_coding};

    #[test]
    fn alphabet_sizes() {
        assert_eq!(g().0.alphabet_size(), 6);
        assert_eq!(g3().0.alphabet_size(), 12);
        assert_eq!(g4().0.alphabet_size(), 18);
        assert_eq!(ab_coding(1).unwrap().0.alphabet_size(), 5);
        assert_eq!(ab_coding(2).unwrap().0.alphabet_size(), 16);
        assert_eq!(ab_coding(3).unwrap().0.alphabet_size(), 22);
        for (name, m, c) in NAMED {
            let (m, c) = load(m, c);
            assert_eq!(m.alphabet_size(), c.size(), "{name}");
        }
    }

    #[test]
    fn all_catalog_morphisms_have_fibonacci_shape() {
        for (name, m, _) in NAMED {
            let m = Morphism::parse(m).unwrap();
            let f = structural_coding(&m).unwrap();
            assert_eq!(commutes_with_fibonacci(&m, &f), Ok(()), "{name}");
        }
    }

    #[test]
    fn known_prefixes() {
        let digits = |d: &Dfao, len: u64| -> String {
            d.eval_prefix(len)
                .unwrap()
                .iter()
                .map(|v| v.to_string())
                .collect()
        };
        assert_eq!(digits(&g3_dfao(), 9), "122101122");
        assert_eq!(
            digits(&g3_dfao(), 55),
            "1221011221211111111121121121211211112111121111111211112"
        );
        assert_eq!(
            digits(&g4_dfao(), 44),
            "12210001112111111010110110111111111111111111"
        );
        assert_eq!(digits(&g_dfao(), 21), "101100111101001011011");
    }

    #[test]
    fn known_ab_words() {
        let word = |ell: u32, len: usize| -> String {
            let (m, c) = ab_coding(ell).unwrap();
            c.apply_word(&m.fixed_point_prefix(0, len).unwrap())
                .iter()
                .map(|l| l.to_string())
                .collect()
        };
        assert_eq!(word(1, 10), "aababaabaa");
        assert_eq!(word(2, 18), "aaabababaabaabaaba");
    }
}
