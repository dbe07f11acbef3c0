//! Small subset-enumeration helpers shared by the oracles.

/// Exact binomial coefficient, `None` on u64 overflow.
pub(crate) fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(u128::from(n - i))?;
        acc /= u128::from(i + 1); // exact: product of i+1 consecutive integers
    }
    u64::try_from(acc).ok()
}

/// Visits every k-subset of `0..n` in lexicographic order. The callback
/// returns `true` to stop early; the function reports whether it stopped.
pub(crate) fn visit_combinations(
    n: usize,
    k: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        if k == 0 {
            return false;
        }
        let mut i = k - 1;
        loop {
            if idx[i] < i + n - k {
                idx[i] += 1;
                for j in (i + 1)..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return false;
            }
            i -= 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(7, 3), Some(35));
        assert_eq!(binomial(7, 0), Some(1));
        assert_eq!(binomial(3, 5), Some(0));
        assert_eq!(binomial(60, 30), Some(118_264_581_564_861_424));
        assert_eq!(binomial(200, 100), None);
    }

    #[test]
    fn enumerates_all_subsets_in_order() {
        let mut seen = Vec::new();
        visit_combinations(4, 2, &mut |s| {
            seen.push(s.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3],
            ]
        );
    }

    #[test]
    fn counts_match_binomial() {
        for n in 0..=9usize {
            for k in 0..=n {
                let mut count = 0u64;
                visit_combinations(n, k, &mut |_| {
                    count += 1;
                    false
                });
                assert_eq!(Some(count), binomial(n as u64, k as u64), "C({n},{k})");
            }
        }
    }

    #[test]
    fn early_stop() {
        let mut count = 0;
        let stopped = visit_combinations(5, 2, &mut |_| {
            count += 1;
            count == 3
        });
        assert!(stopped);
        assert_eq!(count, 3);
    }
}
