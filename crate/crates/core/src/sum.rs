use crate::Scalar;

/// Largest block summed sequentially before splitting.
const PAIRWISE_BLOCK: usize = 64;

/// Pairwise summation of `f(0), ..., f(len - 1)`; used for coefficient sums
/// that can exceed 64 terms so rounding error grows like `log n` instead of
/// `n`.
pub(crate) fn pairwise_sum_fn<S: Scalar>(len: usize, f: &impl Fn(usize) -> S) -> S {
    sum_range(0, len, f)
}

fn sum_range<S: Scalar>(start: usize, len: usize, f: &impl Fn(usize) -> S) -> S {
    if len <= PAIRWISE_BLOCK {
        let mut acc = S::zero();
        for i in start..start + len {
            acc = acc + f(i);
        }
        return acc;
    }
    let half = len / 2;
    sum_range(start, half, f) + sum_range(start + half, len - half, f)
}
