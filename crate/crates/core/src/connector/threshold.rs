use super::ConnectError;

/// Minimum degree that forces a connected `k`-factor in a connected,
/// balanced, `S_{k,l}`-free bipartite graph, for `2 ≤ k ≤ l`.
pub fn threshold_c(k: usize, l: usize) -> Result<i64, ConnectError> {
    if k < 2 || k > l {
        return Err(ConnectError::ParamOrder { k, l });
    }
    Ok(threshold_c_formula(k as i64, l as i64))
}

/// `max{(k³+1)(2l-2k-1) + l, 2(k²-k+l)}` for arbitrary integers, without
/// the parameter-range check.
pub fn threshold_c_formula(k: i64, l: i64) -> i64 {
    let first = (k.pow(3) + 1) * (2 * l - 2 * k - 1) + l;
    let second = 2 * (k * k - k + l);
    first.max(second)
}

/// Minimum degree that forces an `m`-factor in a connected, balanced,
/// `S_{k,l}`-free bipartite graph: `2·max{k,l,m}²`.
pub fn threshold_c_prime(k: usize, l: usize, m: usize) -> i64 {
    let t = k.max(l).max(m) as i64;
    2 * t * t
}

/// Bound on the number of neighbours a vertex has outside its own component
/// of a stuck `k`-factor: `(k²-k+1)(2l-2k-1)`.
pub fn outside_degree_bound(k: usize, l: usize) -> i64 {
    let (k, l) = (k as i64, l as i64);
    (k * k - k + 1) * (2 * l - 2 * k - 1)
}

/// Bound on the number of neighbours a link endpoint has inside its own
/// component of a stuck `k`-factor: `k(k²-k+1)(2l-2k-1) + l - 1`.
pub fn inside_degree_bound(k: usize, l: usize) -> i64 {
    k as i64 * outside_degree_bound(k, l) + l as i64 - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_values() {
        assert_eq!(threshold_c(2, 3), Ok(12));
        assert_eq!(threshold_c(3, 3), Ok(18));
        assert_eq!(threshold_c(2, 2), Ok(8));
        assert_eq!(threshold_c_prime(3, 3, 2), 18);
        assert_eq!(threshold_c_prime(1, 3, 2), 18);
        assert_eq!(threshold_c_prime(1, 1, 1), 2);
    }

    #[test]
    fn first_operand_can_be_negative() {
        assert_eq!(threshold_c_formula(2, 2), 8);
        assert_eq!((2i64.pow(3) + 1) * (2 * 2 - 2 * 2 - 1) + 2, -7);
    }

    #[test]
    fn param_order() {
        assert_eq!(threshold_c(1, 3), Err(ConnectError::ParamOrder { k: 1, l: 3 }));
        assert_eq!(threshold_c(4, 3), Err(ConnectError::ParamOrder { k: 4, l: 3 }));
    }

    #[test]
    fn degree_bounds_sum_below_threshold() {
        for k in 2..6 {
            for l in k..8 {
                let implied = outside_degree_bound(k, l) + inside_degree_bound(k, l);
                let (ki, li) = (k as i64, l as i64);
                assert_eq!(implied, (ki.pow(3) + 1) * (2 * li - 2 * ki - 1) + li - 1);
                assert!(implied < threshold_c(k, l).unwrap());
            }
        }
    }
}
