/// `⌊√n⌋`.
#[inline]
pub fn isqrt(n: u128) -> u128 {
    n.isqrt()
}

/// Returns `r` with `r² = n`, or `None` when `n` is negative or not a square.
#[inline]
pub fn perfect_square(n: i128) -> Option<u128> {
    if n < 0 {
        return None;
    }
    let n = n as u128;
    // squares are 0, 1, 4 or 9 mod 16
    if (0x0213u32 >> (n & 15) as u32) & 1 == 0 {
        return None;
    }
    let r = n.isqrt();
    (r * r == n).then_some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isqrt_small_values() {
        assert_eq!(isqrt(16), 4);
        assert_eq!(isqrt(17), 4);
        assert_eq!(isqrt(0), 0);
        assert_eq!(isqrt(u128::MAX), u64::MAX as u128);
    }

    #[test]
    fn perfect_square_examples() {
        assert_eq!(perfect_square(93636), Some(306));
        assert_eq!(perfect_square(244), None);
        assert_eq!(perfect_square(1), Some(1));
        assert_eq!(perfect_square(0), Some(0));
        assert_eq!(perfect_square(-4), None);
    }

    #[test]
    fn perfect_square_filter_matches_scan() {
        for n in 0..20_000i128 {
            let r = isqrt(n as u128);
            assert_eq!(perfect_square(n), (r * r == n as u128).then_some(r), "{n}");
        }
    }

    #[test]
    fn squares_and_successors_up_to_a_million() {
        for r in 0..=1_000_000u128 {
            let sq = (r * r) as i128;
            assert_eq!(perfect_square(sq), Some(r));
            if r > 0 {
                assert_eq!(perfect_square(sq + 1), None);
            }
        }
    }
}
