use crate::{Nat, Rational};

/// `(max (c_k − c_{k−i} − 1)/i, min (c_k − c_{k−i} + 1)/i)` over
/// `1 ≤ i ≤ k < len`, as exact rationals. `None` for fewer than two terms.
pub fn spectrum_bounds(prefix: &[Nat]) -> Option<(Rational, Rational)> {
    if prefix.len() < 2 {
        return None;
    }
    let mut lower: Option<Rational> = None;
    let mut upper: Option<Rational> = None;
    for k in 1..prefix.len() {
        for i in 1..=k {
            let diff = prefix[k] as i64 - prefix[k - i] as i64;
            let lo = Rational::new(diff - 1, i as i64);
            let hi = Rational::new(diff + 1, i as i64);
            lower = Some(lower.map_or(lo, |v| v.max(lo)));
            upper = Some(upper.map_or(hi, |v| v.min(hi)));
        }
    }
    Some((lower?, upper?))
}

/// Shortest prefix length from which [`spectrum_bounds`] equals `target` for
/// every longer prefix of `seq`, or `None` if the final value differs.
pub fn stabilization_length(seq: &[Nat], target: (Rational, Rational)) -> Option<usize> {
    let mut len = seq.len();
    if spectrum_bounds(seq)? != target {
        return None;
    }
    while len > 2 && spectrum_bounds(&seq[..len - 1]) == Some(target) {
        len -= 1;
    }
    Some(len)
}
