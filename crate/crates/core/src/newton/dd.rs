//! Double description for pointed polyhedral cones, plus a pulling
//! triangulation built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Bitset over constraint indices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn subset_of(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

/// Indices of a maximal linearly independent subset of `rows`, greedily
/// in order.
pub(crate) fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let n = rows.first().map_or(0, |r| r.len());
    let mut echelon: Vec<(usize, Vec<BigRational>)> = Vec::new();
    let mut picked = Vec::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut v: Vec<BigRational> = row.iter().map(|x| BigRational::from_integer(x.clone())).collect();
        for (col, e) in &echelon {
            if !v[*col].is_zero() {
                let f = v[*col].clone();
                for (a, b) in v.iter_mut().zip(e) {
                    *a = &*a - &(&f * b);
                }
            }
        }
        if let Some(col) = (0..n).find(|&j| !v[j].is_zero()) {
            let inv = v[col].recip();
            for a in v.iter_mut() {
                *a = &*a * &inv;
            }
            for (_, e) in echelon.iter_mut() {
                if !e[col].is_zero() {
                    let f = e[col].clone();
                    for (a, b) in e.iter_mut().zip(&v) {
                        *a = &*a - &(&f * b);
                    }
                }
            }
            echelon.push((col, v));
            picked.push(idx);
            if picked.len() == n {
                break;
            }
        }
    }
    picked
}

/// Extreme rays of `{y : ⟨a, y⟩ ≥ 0 for every row a}`, which must be a
/// pointed cone (the rows span the whole space). Rays are primitive and
/// returned in a canonical sorted order.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    let n = rows.first().map_or(0, |r| r.len());
    let basis = independent_rows(rows);
    assert_eq!(basis.len(), n, "cone is not pointed");

    // the initial simplicial cone: columns of the inverse of the basis rows
    let mut mat: Vec<Vec<BigRational>> = basis
        .iter()
        .map(|&i| {
            let mut r: Vec<BigRational> =
                rows[i].iter().map(|x| BigRational::from_integer(x.clone())).collect();
            r.extend((0..n).map(|_| BigRational::zero()));
            r
        })
        .collect();
    for (k, r) in mat.iter_mut().enumerate() {
        r[n + k] = BigRational::one();
    }
    for col in 0..n {
        let piv = (col..n).find(|&i| !mat[i][col].is_zero()).expect("independent");
        mat.swap(col, piv);
        let inv = mat[col][col].recip();
        for a in mat[col].iter_mut() {
            *a = &*a * &inv;
        }
        let prow = mat[col].clone();
        for (i, r) in mat.iter_mut().enumerate() {
            if i != col && !r[col].is_zero() {
                let f = r[col].clone();
                for (a, b) in r.iter_mut().zip(&prow) {
                    *a = &*a - &(&f * b);
                }
            }
        }
    }
    let mut rays: Vec<(Vec<BigInt>, Bits)> = Vec::with_capacity(n);
    for k in 0..n {
        // column k of the inverse
        let col: Vec<BigRational> = (0..n).map(|i| mat[i][n + k].clone()).collect();
        let lcm = col.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ray = primitive(col.iter().map(|x| (x * BigRational::from_integer(lcm.clone())).to_integer()).collect());
        rays.push((ray, Bits::new(m)));
    }
    let mut processed = vec![false; m];
    for &i in &basis {
        processed[i] = true;
    }
    for (ray, z) in rays.iter_mut() {
        for &i in &basis {
            if dot(&rows[i], ray).is_zero() {
                z.set(i);
            }
        }
    }

    for i in 0..m {
        if processed[i] {
            continue;
        }
        processed[i] = true;
        let a = &rows[i];
        let vals: Vec<BigInt> = rays.iter().map(|(r, _)| dot(a, r)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        if neg.is_empty() {
            for (k, (_, z)) in rays.iter_mut().enumerate() {
                if vals[k].is_zero() {
                    z.set(i);
                }
            }
            continue;
        }
        let mut next: Vec<(Vec<BigInt>, Bits)> = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].1.and(&rays[q].1);
                if common.count() + 2 < n {
                    continue;
                }
                let adjacent = (0..rays.len())
                    .all(|k| k == p || k == q || !common.subset_of(&rays[k].1));
                if !adjacent {
                    continue;
                }
                let r: Vec<BigInt> = rays[q]
                    .0
                    .iter()
                    .zip(&rays[p].0)
                    .map(|(rq, rp)| &vals[p] * rq - &vals[q] * rp)
                    .collect();
                let mut z = common;
                z.set(i);
                next.push((primitive(r), z));
            }
        }
        for (k, (r, z)) in rays.drain(..).enumerate() {
            if vals[k].is_positive() {
                next.push((r, z));
            } else if vals[k].is_zero() {
                let mut z = z;
                z.set(i);
                next.push((r, z));
            }
        }
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|(r, _)| r).collect();
    out.sort();
    out.dedup();
    out
}

/// Affine dimension of a point set together with coordinates to project
/// onto: the returned columns, restricted to the points, are affinely
/// independent of full rank.
fn affine_frame(points: &[&[i64]]) -> (usize, Vec<usize>) {
    let base = points[0];
    let diffs: Vec<Vec<BigInt>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| BigInt::from(a - b)).collect())
        .collect();
    if diffs.is_empty() {
        return (0, Vec::new());
    }
    // column pivots of the difference matrix
    let d = base.len();
    let transposed: Vec<Vec<BigInt>> =
        (0..d).map(|j| diffs.iter().map(|r| r[j].clone()).collect()).collect();
    let cols = independent_rows(&transposed);
    (cols.len(), cols)
}

/// Pulling triangulation of `conv(points)`. Each simplex lists `k + 1`
/// indices into `points`, where `k` is the affine dimension.
pub(crate) fn triangulate(points: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let idx: Vec<usize> = (0..points.len()).collect();
    let mut out = Vec::new();
    pull(points, &idx, &mut out);
    out
}

fn pull(points: &[Vec<i64>], subset: &[usize], out: &mut Vec<Vec<usize>>) {
    let mut subset: Vec<usize> = subset.to_vec();
    subset.sort_by(|&a, &b| points[a].cmp(&points[b]).then(a.cmp(&b)));
    subset.dedup_by(|a, b| points[*a] == points[*b]);
    let refs: Vec<&[i64]> = subset.iter().map(|&i| points[i].as_slice()).collect();
    let (k, cols) = affine_frame(&refs);
    match k {
        0 => out.push(vec![subset[0]]),
        1 => {
            let c = cols[0];
            let lo = *subset.iter().min_by_key(|&&i| points[i][c]).unwrap();
            let hi = *subset.iter().max_by_key(|&&i| points[i][c]).unwrap();
            out.push(vec![lo, hi]);
        }
        _ => {
            // facets of the projected hull via the cone over (1, π(s))
            let rows: Vec<Vec<BigInt>> = subset
                .iter()
                .map(|&i| {
                    std::iter::once(BigInt::one()).chain(cols.iter().map(|&c| BigInt::from(points[i][c]))).collect()
                })
                .collect();
            // the lexicographically smallest point is a vertex
            let apex = subset[0];
            for ray in extreme_rays(&rows) {
                let tight: Vec<usize> = subset
                    .iter()
                    .zip(&rows)
                    .filter(|(_, r)| dot(r, &ray).is_zero())
                    .map(|(&i, _)| i)
                    .collect();
                if tight.contains(&apex) {
                    continue;
                }
                let mut sub = Vec::new();
                pull(points, &tight, &mut sub);
                for mut s in sub {
                    s.push(apex);
                    out.push(s);
                }
            }
        }
    }
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub(crate) fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(piv) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if piv != k {
            a.swap(piv, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    #[test]
    fn orthant_rays() {
        let rays = extreme_rays(&big(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(rays, big(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]));
    }

    #[test]
    fn square_cone() {
        // cone over the unit square: rays are its four vertices
        let rows = big(&[&[0, 1, 0], &[1, -1, 0], &[0, 0, 1], &[1, 0, -1]]);
        let rays = extreme_rays(&rows);
        assert_eq!(rays, big(&[&[1, 0, 0], &[1, 0, 1], &[1, 1, 0], &[1, 1, 1]]));
    }

    #[test]
    fn redundant_rows_do_not_create_rays() {
        let rows = big(&[&[1, 0], &[0, 1], &[1, 1], &[2, 1], &[1, 0]]);
        assert_eq!(extreme_rays(&rows), big(&[&[0, 1], &[1, 0]]));
    }

    #[test]
    fn triangulated_square_and_cube() {
        let sq = vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1], vec![0, 0]];
        let tris = triangulate(&sq);
        let area: BigInt = tris
            .iter()
            .map(|t| {
                let m: Vec<Vec<i64>> = t[1..].iter().map(|&i| vec![sq[i][0] - sq[t[0]][0], sq[i][1] - sq[t[0]][1]]).collect();
                determinant(&m).abs()
            })
            .sum();
        assert_eq!(area, BigInt::from(2));

        let mut cube = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    cube.push(vec![x, y, z]);
                }
            }
        }
        cube.push(vec![1, 1, 0]);
        let tets = triangulate(&cube);
        let vol: BigInt = tets
            .iter()
            .map(|t| {
                let m: Vec<Vec<i64>> =
                    t[1..].iter().map(|&i| (0..3).map(|c| cube[i][c] - cube[t[0]][c]).collect()).collect();
                determinant(&m).abs()
            })
            .sum();
        assert_eq!(vol, BigInt::from(6));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&[vec![2, 0], vec![0, 3]]), BigInt::from(6));
        assert_eq!(determinant(&[vec![0, 1], vec![1, 0]]), BigInt::from(-1));
        assert_eq!(determinant(&[vec![1, 2], vec![2, 4]]), BigInt::zero());
        assert_eq!(determinant(&[vec![2, 1, 0], vec![1, 3, 1], vec![0, 1, 4]]), BigInt::from(18));
    }
}
