//! Published decompositions, kept as data for comparison. Each string is a
//! sum of `mult*plus|minus` terms readable by [`crate::glrep::parse_rep`].

/// `∧³U`, 61 irreducibles.
pub const WEDGE3_U: &str = "3,3|1^3 + 3,2,1|2,1 + 3,1^3|3 + 2^3|3 + 2,2,1,1|2,1 + 2,2,1,1|1^3 + 2,1^4|2,1 + 1^6|1^3 \
    + 3,2|2 + 2*3,2|1,1 + 2*3,1,1|2 + 3,1,1|1,1 + 3*2,2,1|2 + 3*2,2,1|1,1 + 3*2,1^3|2 + 3*2,1^3|1,1 \
    + 1^5|2 + 2*1^5|1,1 + 2*3,1|1 + 6*2,2|1 + 7*2,1,1|1 + 6*1^4|1 + 3|0 + 4*2,1|0 + 6*1^3|0";

/// `∧³U^O` with `U^O = V_{1²,1}`, 36 irreducibles.
pub const WEDGE3_UO: &str = "3,3|1^3 + 3,2,1|2,1 + 3,1^3|3 + 2^3|3 + 2,2,1,1|2,1 + 2,2,1,1|1^3 + 2,1^4|2,1 + 1^6|1^3 \
    + 3,2|2 + 3,2|1,1 + 3,1,1|2 + 3,1,1|1,1 + 2*2,2,1|2 + 2*2,2,1|1,1 + 2*2,1^3|2 + 2*2,1^3|1,1 \
    + 1^5|2 + 1^5|1,1 + 3,1|1 + 3*2,2|1 + 3*2,1,1|1 + 3*1^4|1 + 3|0 + 2,1|0 + 2*1^3|0";

/// `W_1`.
pub const W1: &str = "1,1|1 + 1|0";

/// `W_2`, summed over the five pairs of total size 2.
pub const W2: &str = "1^3|1 + 1,1|0 + 1^4|1,1 + 2,1,1|2 + 2,2|1,1 + 2,1|1 + 1^3|1 + 1,1|0";

/// `W_3`, 34 irreducibles.
pub const W3: &str = "3,3|1^3 + 3,2,1|2,1 + 3,1^3|3 + 2^3|3 + 2,2,1,1|2,1 + 2,2,1,1|1^3 + 2,1^4|2,1 + 1^6|1^3 \
    + 3,2|1,1 + 3,1,1|2 + 2*2,2,1|2 + 2*2,2,1|1,1 + 2*2,1^3|2 + 2*2,1^3|1,1 + 1^5|2 + 2*1^5|1,1 \
    + 2*2,2|1 + 3*2,1,1|1 + 4*1^4|1 + 2,1|0 + 3*1^3|0";

/// `W_3^O`, 19 irreducibles.
pub const W3_O: &str = "3,3|1^3 + 3,2,1|2,1 + 3,1^3|3 + 2^3|3 + 2,2,1,1|2,1 + 2,2,1,1|1^3 + 2,1^4|2,1 + 1^6|1^3 \
    + 2,2,1|2 + 2,2,1|1,1 + 2,1^3|2 + 2,1^3|1,1 + 1^5|2 + 1^5|1,1 + 2,2|1 + 2,1,1|1 + 2*1^4|1 + 1^3|0";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::glrep::parse_rep;

    #[test]
    fn counts() {
        let cases = [(WEDGE3_U, 61, 25), (WEDGE3_UO, 36, 25), (W3, 34, 21), (W3_O, 19, 18)];
        for (s, total, distinct) in cases {
            let r = parse_rep(s).unwrap();
            assert_eq!(r.total_multiplicity(), total);
            assert_eq!(r.distinct(), distinct);
        }
    }
}
