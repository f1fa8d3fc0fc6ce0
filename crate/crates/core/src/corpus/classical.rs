use std::collections::HashMap;

use super::field::Field;
use crate::error::{Error, Result};
use crate::permcore::{GroupHandle, Permutation};

type Matrix = Vec<Vec<usize>>;

/// Nonzero vectors in lexicographic order, first coordinate most significant.
fn vectors(n: usize, q: usize) -> Vec<Vec<usize>> {
    (1..q.pow(n as u32))
        .map(|mut x| {
            let mut v = vec![0; n];
            for slot in v.iter_mut().rev() {
                *slot = x % q;
                x /= q;
            }
            v
        })
        .collect()
}

/// Nonzero vectors whose first nonzero coordinate is 1, in lexicographic order.
fn projective_points(n: usize, q: usize) -> Vec<Vec<usize>> {
    vectors(n, q).into_iter().filter(|v| v.iter().find(|&&c| c != 0) == Some(&1)).collect()
}

fn times(f: &Field, v: &[usize], a: &Matrix) -> Vec<usize> {
    (0..v.len()).map(|j| v.iter().enumerate().fold(0, |acc, (i, &vi)| f.add(acc, f.mul(vi, a[i][j])))).collect()
}

fn normalize(f: &Field, v: Vec<usize>) -> Vec<usize> {
    let lead = *v.iter().find(|&&c| c != 0).expect("nonzero vector");
    let s = f.inv(lead).unwrap();
    v.into_iter().map(|c| f.mul(c, s)).collect()
}

fn identity(n: usize) -> Matrix {
    (0..n).map(|i| (0..n).map(|j| usize::from(i == j)).collect()).collect()
}

/// Transvections `I + a E_ij` with `a` running over an additive basis.
fn transvections(f: &Field, n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            for &a in &f.additive_basis() {
                let mut m = identity(n);
                m[i][j] = a;
                out.push(m);
            }
        }
    }
    out
}

fn action(f: &Field, points: &[Vec<usize>], mats: &[Matrix], projective: bool) -> Result<Vec<Permutation>> {
    let index: HashMap<&Vec<usize>, usize> = points.iter().enumerate().map(|(i, v)| (v, i)).collect();
    mats.iter()
        .map(|a| {
            let images = points
                .iter()
                .map(|v| {
                    let w = times(f, v, a);
                    let w = if projective { normalize(f, w) } else { w };
                    index[&w]
                })
                .collect();
            Permutation::from_images(images)
        })
        .collect()
}

fn check_params(n: usize, q: u64) -> Result<Field> {
    if n == 0 {
        return Err(Error::Unsupported("matrix dimension must be positive".into()));
    }
    let f = Field::new(q)?;
    if (q as f64).powi(n as i32) > 20_000.0 {
        return Err(Error::Unsupported(format!("GL({n},{q}) acts on too many vectors")));
    }
    Ok(f)
}

/// `GL(n, q)` on the `q^n - 1` nonzero row vectors.
pub fn make_gl(n: usize, q: u64) -> Result<GroupHandle> {
    let f = check_params(n, q)?;
    let mut mats = transvections(&f, n);
    let mut d = identity(n);
    d[0][0] = f.primitive();
    mats.push(d);
    let points = vectors(n, f.q);
    GroupHandle::new(points.len(), action(&f, &points, &mats, false)?)
}

/// `SL(n, q)` on the `q^n - 1` nonzero row vectors.
pub fn make_sl(n: usize, q: u64) -> Result<GroupHandle> {
    let f = check_params(n, q)?;
    let points = vectors(n, f.q);
    if n == 1 {
        return GroupHandle::trivial(points.len());
    }
    GroupHandle::new(points.len(), action(&f, &points, &transvections(&f, n), false)?)
}

/// `PSL(n, q)` on the `(q^n - 1)/(q - 1)` projective points.
pub fn make_psl(n: usize, q: u64) -> Result<GroupHandle> {
    let f = check_params(n, q)?;
    let points = projective_points(n, f.q);
    if n == 1 {
        return GroupHandle::trivial(points.len());
    }
    GroupHandle::new(points.len(), action(&f, &points, &transvections(&f, n), true)?)
}
