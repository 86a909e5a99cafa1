//! Hamiltonian paths and cycles of the hypercube `{0,1}^d`, vertices packed
//! into the low `d` bits of a `u64`.

use crate::error::{Error, Result};

fn reflected(i: u64) -> u64 {
    i ^ (i >> 1)
}

fn check_dim(d: u32) -> Result<()> {
    if d > 32 {
        return Err(Error::Precondition(format!("hypercube dimension {d} is too large")));
    }
    Ok(())
}

/// Reflected Gray code translated so that it starts at `start`.
pub fn hypercube_ham_path_from(d: u32, start: u64) -> Result<Vec<u64>> {
    check_dim(d)?;
    if start >> d != 0 {
        return Err(Error::Precondition(format!("{start:#b} is not a vertex of the {d}-cube")));
    }
    Ok((0..1u64 << d).map(|i| reflected(i) ^ start).collect())
}

/// Hamiltonian cycle through the edge `u v`, listed from `u` with `v` second.
///
/// The reflected code's first edge flips bit 0; swapping bit 0 with the bit
/// where `u` and `v` differ and translating by `u` moves it onto `u v`.
pub fn hypercube_ham_cycle_through_edge(d: u32, u: u64, v: u64) -> Result<Vec<u64>> {
    check_dim(d)?;
    if d < 2 {
        return Err(Error::Precondition(format!("the {d}-cube has no Hamiltonian cycle")));
    }
    if (u | v) >> d != 0 || (u ^ v).count_ones() != 1 {
        return Err(Error::Precondition(format!("{u:#b} and {v:#b} are not adjacent in the {d}-cube")));
    }
    let k = (u ^ v).trailing_zeros();
    let swap = |x: u64| {
        let (b0, bk) = (x & 1, (x >> k) & 1);
        (x & !1 & !(1 << k)) | (bk) | (b0 << k)
    };
    Ok((0..1u64 << d).map(|i| swap(reflected(i)) ^ u).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_ham_path(d: u32, p: &[u64]) -> bool {
        let mut seen = vec![false; 1 << d];
        for &x in p {
            if seen[x as usize] {
                return false;
            }
            seen[x as usize] = true;
        }
        p.len() == 1 << d && p.windows(2).all(|w| (w[0] ^ w[1]).count_ones() == 1)
    }

    #[test]
    fn square() {
        assert_eq!(hypercube_ham_cycle_through_edge(2, 0b00, 0b01).unwrap(), vec![0, 1, 3, 2]);
    }

    #[test]
    fn small_paths() {
        assert_eq!(hypercube_ham_path_from(0, 0).unwrap(), vec![0]);
        assert_eq!(hypercube_ham_path_from(1, 1).unwrap(), vec![1, 0]);
        for s in 0..16 {
            let p = hypercube_ham_path_from(4, s).unwrap();
            assert_eq!(p[0], s);
            assert!(is_ham_path(4, &p));
        }
    }

    #[test]
    fn every_edge_of_the_cube() {
        for u in 0..8u64 {
            for b in 0..3 {
                let v = u ^ (1 << b);
                let c = hypercube_ham_cycle_through_edge(3, u, v).unwrap();
                assert!(is_ham_path(3, &c));
                assert_eq!((c[0], c[1]), (u, v));
                assert_eq!((c[7] ^ c[0]).count_ones(), 1);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(hypercube_ham_cycle_through_edge(1, 0, 1).is_err());
        assert!(hypercube_ham_cycle_through_edge(3, 0, 3).is_err());
        assert!(hypercube_ham_path_from(2, 4).is_err());
    }
}
