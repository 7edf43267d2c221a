//! Maximum-weight permutations inside a displacement band.
//!
//! Item `x` may move to slot `y` only when `|x - y| <= p`. The solver is the
//! shortest augmenting path method with vertex potentials, adding one item at
//! a time; columns outside an item's band are never relaxed.

const INF: i64 = i64::MAX / 4;

/// Maximises `Σ_x w(x, π(x))` over permutations `π` of `0..len` with
/// `|π(x) - x| <= p`. Returns the optimum and `π`.
///
/// Ties resolve deterministically: among equal-cost augmenting paths the
/// one ending at the lowest free slot wins.
pub fn banded_max(len: usize, p: usize, w: impl Fn(usize, usize) -> i64) -> (i64, Vec<usize>) {
    if len == 0 {
        return (0, Vec::new());
    }
    // 1-based rows (items) and columns (slots); row 0 and column 0 are the
    // virtual source used while growing the matching.
    let cost = |i: usize, j: usize| -> i64 { -w(i - 1, j - 1) };
    let mut pot_row = vec![0i64; len + 1];
    let mut pot_col = vec![0i64; len + 1];
    let mut row_of = vec![0usize; len + 1];
    let mut way = vec![0usize; len + 1];
    let mut minv = vec![INF; len + 1];
    let mut used = vec![false; len + 1];

    for i in 1..=len {
        row_of[0] = i;
        let mut j0 = 0;
        minv.iter_mut().for_each(|m| *m = INF);
        used.iter_mut().for_each(|u| *u = false);
        loop {
            used[j0] = true;
            let i0 = row_of[j0];
            let lo = i0.saturating_sub(p).max(1);
            let hi = (i0 + p).min(len);
            for j in lo..=hi {
                if used[j] {
                    continue;
                }
                let cur = cost(i0, j) - pot_row[i0] - pot_col[j];
                if cur < minv[j] {
                    minv[j] = cur;
                    way[j] = j0;
                }
            }
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=len {
                if !used[j] && minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            assert!(j1 != 0, "banded assignment has no augmenting path");
            for j in 0..=len {
                if used[j] {
                    pot_row[row_of[j]] += delta;
                    pot_col[j] -= delta;
                } else if minv[j] < INF {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if row_of[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            row_of[j0] = row_of[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut perm = vec![0usize; len];
    for j in 1..=len {
        perm[row_of[j] - 1] = j - 1;
    }
    let total = perm.iter().enumerate().map(|(x, &y)| w(x, y)).sum();
    (total, perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(len: usize, p: usize, w: &dyn Fn(usize, usize) -> i64) -> i64 {
        fn go(
            x: usize,
            len: usize,
            p: usize,
            used: &mut Vec<bool>,
            w: &dyn Fn(usize, usize) -> i64,
        ) -> i64 {
            if x == len {
                return 0;
            }
            let mut best = i64::MIN;
            for y in x.saturating_sub(p)..=(x + p).min(len - 1) {
                if !used[y] {
                    used[y] = true;
                    let rest = go(x + 1, len, p, used, w);
                    if rest != i64::MIN {
                        best = best.max(rest + w(x, y));
                    }
                    used[y] = false;
                }
            }
            best
        }
        go(0, len, p, &mut vec![false; len], w)
    }

    #[test]
    fn identity_when_band_is_zero() {
        let (v, perm) = banded_max(5, 0, |x, y| (x * 10 + y) as i64);
        assert_eq!(perm, vec![0, 1, 2, 3, 4]);
        assert_eq!(v, (0..5).map(|x| 11 * x as i64).sum::<i64>());
    }

    #[test]
    fn matches_brute_force_on_small_instances() {
        for len in 1..=8 {
            for p in 0..=3 {
                let w = |x: usize, y: usize| {
                    ((x * 7 + 3) % 5) as i64 * y as i64 - ((x + 2 * y) % 3) as i64
                };
                let (v, perm) = banded_max(len, p, w);
                assert_eq!(v, brute(len, p, &w), "len {len} p {p}");
                let mut seen = perm.clone();
                seen.sort_unstable();
                assert_eq!(seen, (0..len).collect::<Vec<_>>());
                assert!(perm.iter().enumerate().all(|(x, &y)| x.abs_diff(y) <= p));
            }
        }
    }
}
