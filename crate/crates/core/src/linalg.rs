//! Exact rank by fraction-free (Bareiss) elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Rank of an integer matrix given by rows.
pub fn rank_fraction_free(mut rows: Vec<Vec<BigInt>>) -> usize {
    let Some(ncols) = rows.first().map(Vec::len) else {
        return 0;
    };
    assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for j in col + 1..ncols {
                let v = &prow[col] * &row[j] - &lead * &prow[j];
                debug_assert!((&v % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = v / &prev;
            }
        }
        prev = rows[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Scales a rational row by the lcm of its denominators.
pub fn clear_denominators(row: &[BigRational]) -> Vec<BigInt> {
    let lcm = row.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

pub fn rank_rational(rows: &[Vec<BigRational>]) -> usize {
    rank_fraction_free(rows.iter().map(|r| clear_denominators(r)).collect())
}
