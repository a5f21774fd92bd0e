//! Exact ground-state linear algebra at β = 1.

use crate::algebra::{Kind, LinOp, Rep};
use crate::arith::{ratio, Rat};
use crate::error::{integrity, usage, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Matrix = Vec<Vec<Rat>>;

pub fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect()).collect()
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    row.iter()
                        .zip(b)
                        .filter(|(x, _)| !x.is_zero())
                        .fold(Rat::zero(), |acc, (x, brow)| acc + x * &brow[j])
                })
                .collect()
        })
        .collect()
}

pub fn mat_add(a: &Matrix, b: &Matrix, c: &Rat) -> Matrix {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y * c).collect()).collect()
}

/// Hamiltonian at q = ω, with the boundary terms of each type.
pub fn build_h(rep: &Rep) -> Result<Matrix> {
    let n = rep.dim();
    let one = Rat::one();
    let half = ratio(1, 2);
    let mut terms: Vec<(Rat, LinOp)> = Vec::new();
    let r = rep.spec.rank;
    match rep.spec.kind {
        Kind::A => {
            for e in &rep.e {
                terms.push((one.clone(), e.clone()));
            }
            let s = rep.rot.as_ref().unwrap();
            terms.push((one.clone(), s.transpose().compose(&rep.e[0]).compose(s)));
        }
        Kind::B => {
            for e in &rep.e {
                terms.push((one.clone(), e.clone()));
            }
        }
        Kind::C => {
            terms.push((half.clone(), rep.e[0].clone()));
            terms.push((half.clone(), rep.conj.clone().unwrap()));
            for e in &rep.e[1..] {
                terms.push((one.clone(), e.clone()));
            }
            terms.push((one.clone(), rep.wall.clone().unwrap()));
        }
        Kind::D => {
            let Some(e0) = &rep.e0 else {
                return usage("the type D Hamiltonian needs odd rank");
            };
            terms.push((one.clone(), e0.clone()));
            for e in &rep.e[..r - 2] {
                terms.push((one.clone(), e.clone()));
            }
            terms.push((half.clone(), rep.e[r - 2].clone()));
            terms.push((half, rep.conj.clone().unwrap()));
        }
    }
    let mut h = vec![vec![Rat::zero(); n]; n];
    for (w, op) in terms {
        h = mat_add(&h, &op.at_omega()?, &w);
    }
    Ok(h)
}

pub fn mat_vec(h: &Matrix, v: &[Rat]) -> Vec<Rat> {
    h.iter().map(|row| row.iter().zip(v).fold(Rat::zero(), |a, (x, y)| a + x * y)).collect()
}

/// The common ratio (HΨ)_π/Ψ_π; zero entries of Ψ must map to zero.
pub fn rayleigh(h: &Matrix, psi: &[BigInt]) -> Result<Rat> {
    let v: Vec<Rat> = psi.iter().map(|x| Rat::from_integer(x.clone())).collect();
    let hv = mat_vec(h, &v);
    let mut lam: Option<Rat> = None;
    for (a, b) in hv.iter().zip(&v) {
        if b.is_zero() {
            if !a.is_zero() {
                return integrity("H Ψ is nonzero where Ψ vanishes");
            }
            continue;
        }
        let l = a / b;
        match &lam {
            None => lam = Some(l),
            Some(x) if *x != l => return integrity(format!("Rayleigh ratios {x} and {l} differ")),
            _ => {}
        }
    }
    lam.ok_or_else(|| crate::Error::Usage("zero vector".into()))
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut Matrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = Rat::one() / &m[r][c];
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pr = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pr) {
                    *x = &*x - &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of {x : Mx = 0}.
pub fn nullspace(m: &Matrix) -> Vec<Vec<Rat>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let piv = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::one();
            for (row, &pc) in piv.iter().enumerate() {
                x[pc] = -a[row][f].clone();
            }
            x
        })
        .collect()
}

/// Some x with Mx = b, if one exists.
pub fn solve_linear(m: &Matrix, b: &[Rat]) -> Option<Vec<Rat>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Matrix = m.iter().zip(b).map(|(r, y)| r.iter().cloned().chain([y.clone()]).collect()).collect();
    let piv = rref(&mut a);
    if piv.contains(&cols) {
        return None;
    }
    let mut x = vec![Rat::zero(); cols];
    for (row, &pc) in piv.iter().enumerate() {
        x[pc] = a[row][cols].clone();
    }
    Some(x)
}

pub fn transpose(m: &Matrix) -> Matrix {
    let cols = m.first().map_or(0, Vec::len);
    (0..cols).map(|j| m.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Scales a rational vector to coprime integers with a positive first nonzero entry.
pub fn primitive(v: &[Rat]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * Rat::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |a, x| a.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = ints.iter().find(|x| !x.is_zero()).map_or(false, |x| x.is_negative());
    ints.into_iter().map(|x| if sign { -(x / &g) } else { x / &g }).collect()
}

/// The left eigenvector of H for λ as coprime positive integers.
pub fn left_perron(h: &Matrix, lam: &Rat) -> Result<Vec<BigInt>> {
    let n = h.len();
    let shifted = mat_add(&transpose(h), &identity(n), &-lam.clone());
    let ns = nullspace(&shifted);
    if ns.len() != 1 {
        return integrity(format!("left null space of H − {lam} has dimension {}", ns.len()));
    }
    let v = primitive(&ns[0]);
    if v.iter().any(|x| !x.is_positive()) {
        return integrity("left eigenvector is not strictly positive");
    }
    Ok(v)
}

pub fn bilinear(v: &[BigInt], psi: &[BigInt]) -> BigInt {
    v.iter().zip(psi).map(|(a, b)| a * b).sum()
}

/// det(xI − M) as coefficients c_0..c_n (c_n = 1), by Faddeev–LeVerrier.
pub fn charpoly(m: &Matrix) -> Vec<Rat> {
    let n = m.len();
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut mk = vec![vec![Rat::zero(); n]; n];
    for k in 1..=n {
        // M_k = M·M_{k−1} + c_{n−k+1} I
        let mut next = mat_mul(m, &mk);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &c[n - k + 1];
        }
        let am = mat_mul(m, &next);
        let tr = (0..n).fold(Rat::zero(), |a, i| a + &am[i][i]);
        c[n - k] = -tr / Rat::from_integer(BigInt::from(k));
        mk = next;
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn m(rows: &[&[i64]]) -> Matrix {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    #[test]
    fn charpoly_of_2x2() {
        // x² − 5x − 2 for [[1,2],[3,4]]
        assert_eq!(charpoly(&m(&[&[1, 2], &[3, 4]])), vec![rat(-2), rat(-5), rat(1)]);
    }

    #[test]
    fn nullspace_of_rank_one() {
        let ns = nullspace(&m(&[&[1, 2, 3], &[2, 4, 6]]));
        assert_eq!(ns.len(), 2);
        for x in ns {
            assert_eq!(x[0].clone() + rat(2) * &x[1] + rat(3) * &x[2], rat(0));
        }
    }

    #[test]
    fn primitive_scaling() {
        let v = primitive(&[ratio(-1, 2), ratio(-3, 4), rat(0)]);
        assert_eq!(v, vec![BigInt::from(2), BigInt::from(3), BigInt::from(0)]);
    }

    #[test]
    fn left_perron_of_stochastic() {
        // columns sum to 1, so the all-ones row vector is a left eigenvector for 1
        let h = vec![vec![ratio(1, 2), ratio(1, 3)], vec![ratio(1, 2), ratio(2, 3)]];
        assert_eq!(left_perron(&h, &rat(1)).unwrap(), vec![BigInt::from(1), BigInt::from(1)]);
    }

    #[test]
    fn solve_inconsistent() {
        assert!(solve_linear(&m(&[&[1, 1], &[2, 2]]), &[rat(1), rat(3)]).is_none());
        assert_eq!(solve_linear(&m(&[&[1, 1], &[1, -1]]), &[rat(3), rat(1)]).unwrap(), vec![rat(2), rat(1)]);
    }
}
