//! Rank over the prime field `Z/p`.

/// Rank of a dense row-major integer matrix reduced mod `p`.
pub(crate) fn rank_mod_p(rows: usize, cols: usize, entries: &[i64], p: u64) -> usize {
    debug_assert!((2..(1 << 32)).contains(&p));
    let mut m: Vec<u64> = entries
        .iter()
        .map(|&x| x.rem_euclid(p as i64) as u64)
        .collect();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r * cols + c] != 0) else {
            continue;
        };
        if pr != rank {
            for k in 0..cols {
                m.swap(pr * cols + k, rank * cols + k);
            }
        }
        let inv = inverse_mod(m[rank * cols + c], p);
        for k in c..cols {
            m[rank * cols + k] = m[rank * cols + k] * inv % p;
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = m[r * cols + c];
            if f == 0 {
                continue;
            }
            for k in c..cols {
                let sub = f * m[rank * cols + k] % p;
                m[r * cols + k] = (m[r * cols + k] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2)
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

pub(crate) fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
