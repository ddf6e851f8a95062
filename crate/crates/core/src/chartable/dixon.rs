use num_integer::Integer;

use super::modp::{choose_prime, Field};
use crate::error::{Error, Result};
use crate::permgroup::{ConjugacyClasses, PermGroup};

/// A common invariant subspace of the class matrices, as echelon rows with
/// their pivot columns, plus the first class matrix not yet tried on it.
struct Subspace {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
    next_matrix: usize,
}

/// The irreducible characters of a rational group, unsorted.
pub(super) fn irreducible_characters(
    group: &PermGroup,
    classes: &ConjugacyClasses,
) -> Result<Vec<Vec<i64>>> {
    let n = classes.len();
    let order = group.order() as u64;
    let p = choose_prime(group.exponent(), order);
    if p >= 1 << 32 {
        return Err(Error::LiftFailure(format!("prime {p} is too large")));
    }
    let f = Field::new(p);
    let matrices = class_matrices(group, classes, f);
    let central = split_common_eigenvectors(&matrices, f)?;

    let sizes: Vec<u64> = classes.iter().map(|c| c.size as u64).collect();
    let inverse: Vec<usize> = (0..n).map(|k| classes.inverse_class(group, k)).collect();
    let power_classes: Vec<Vec<usize>> = (0..n)
        .map(|k| {
            (0..classes[k].element_order)
                .map(|j| classes.power_class(group, k, j))
                .collect()
        })
        .collect();

    central
        .into_iter()
        .map(|w| {
            let degree = character_degree(&w, &sizes, &inverse, order, f)?;
            let d = f.reduce(degree as u64);
            let values: Vec<u64> = (0..n)
                .map(|k| f.mul(f.mul(w[k], d), f.inv(sizes[k])))
                .collect();
            (0..n)
                .map(|k| lift_value(&values, &power_classes[k], degree, f))
                .collect()
        })
        .collect()
}

/// `M_i[j][k]` = number of `x ∈ C_i` with `x⁻¹ z_k ∈ C_j`, for a fixed
/// representative `z_k` of class `k`, reduced mod p.
fn class_matrices(group: &PermGroup, classes: &ConjugacyClasses, f: Field) -> Vec<Vec<Vec<u64>>> {
    let n = classes.len();
    classes
        .iter()
        .map(|ci| {
            let mut m = vec![vec![0u64; n]; n];
            for (k, ck) in classes.iter().enumerate() {
                let z = ck.representative;
                for &x in &ci.members {
                    let y = group.mul(group.inv(x), z);
                    m[classes.class_of(y)][k] += 1;
                }
            }
            for row in &mut m {
                for x in row.iter_mut() {
                    *x = f.reduce(*x);
                }
            }
            m
        })
        .collect()
}

/// Splits `F_p^n` into one-dimensional common eigenspaces of the class
/// matrices. Each returned vector is scaled so its identity-class entry is 1.
fn split_common_eigenvectors(matrices: &[Vec<Vec<u64>>], f: Field) -> Result<Vec<Vec<u64>>> {
    let n = matrices.len();
    let identity: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut work = vec![Subspace {
        basis: identity,
        pivots: (0..n).collect(),
        next_matrix: 1,
    }];
    let mut done = Vec::new();
    while let Some(mut space) = work.pop() {
        if space.basis.len() == 1 {
            done.push(space.basis.pop().unwrap());
            continue;
        }
        let i = space.next_matrix;
        if i >= n {
            return Err(Error::LiftFailure(format!(
                "a {}-dimensional common eigenspace did not split",
                space.basis.len()
            )));
        }
        let pieces = split_by(&space, &matrices[i], f)?;
        if pieces.len() == 1 {
            space.next_matrix = i + 1;
            work.push(space);
        } else {
            for (basis, pivots) in pieces {
                work.push(Subspace {
                    basis,
                    pivots,
                    next_matrix: i + 1,
                });
            }
        }
    }
    done.into_iter()
        .map(|w| {
            if w[0] == 0 {
                return Err(Error::LiftFailure("central character vanishes at identity".into()));
            }
            let s = f.inv(w[0]);
            Ok(w.into_iter().map(|x| f.mul(x, s)).collect())
        })
        .collect::<Result<Vec<_>>>()
        .map(|mut v: Vec<Vec<u64>>| {
            v.sort();
            v
        })
}

/// Eigenspace decomposition of `m` restricted to `space`.
fn split_by(
    space: &Subspace,
    m: &[Vec<u64>],
    f: Field,
) -> Result<Vec<(Vec<Vec<u64>>, Vec<usize>)>> {
    let d = space.basis.len();
    let n = m.len();
    let images: Vec<Vec<u64>> = space
        .basis
        .iter()
        .map(|b| {
            (0..n)
                .map(|row| (0..n).fold(0, |acc, c| f.add(acc, f.mul(m[row][c], b[c]))))
                .collect()
        })
        .collect();
    // restricted[s][r] = coordinate s of M·b_r
    let restricted: Vec<Vec<u64>> = (0..d)
        .map(|s| (0..d).map(|r| images[r][space.pivots[s]]).collect())
        .collect();
    let poly = f.char_poly(&restricted);
    let roots: Vec<u64> = (0..f.p).filter(|&x| f.eval(&poly, x) == 0).collect();
    if roots.len() == 1 {
        let lambda = roots[0];
        let scalar = (0..d).all(|s| {
            (0..d).all(|r| restricted[s][r] == if s == r { lambda } else { 0 })
        });
        if scalar {
            return Ok(vec![(space.basis.clone(), space.pivots.clone())]);
        }
    }
    let mut pieces = Vec::new();
    let mut total = 0;
    for lambda in roots {
        let shifted: Vec<Vec<u64>> = (0..d)
            .map(|s| {
                (0..d)
                    .map(|r| {
                        let diag = if s == r { lambda } else { 0 };
                        f.sub(restricted[s][r], diag)
                    })
                    .collect()
            })
            .collect();
        let coeffs = f.null_space(&shifted, d);
        total += coeffs.len();
        let vectors: Vec<Vec<u64>> = coeffs
            .iter()
            .map(|u| {
                (0..n)
                    .map(|c| {
                        (0..d).fold(0, |acc, r| f.add(acc, f.mul(u[r], space.basis[r][c])))
                    })
                    .collect()
            })
            .collect();
        pieces.push(f.echelon(vectors));
    }
    if total != d {
        return Err(Error::LiftFailure(
            "class matrix is not diagonalisable over the chosen prime field".into(),
        ));
    }
    Ok(pieces)
}

/// `χ(1)` from `|G| / χ(1)² = Σ_k ω_k ω_{k̄} / |C_k|`; the square root is
/// unique in `1..=√|G|` because `p > 2√|G|`.
fn character_degree(w: &[u64], sizes: &[u64], inverse: &[usize], order: u64, f: Field) -> Result<i64> {
    let s = (0..w.len()).fold(0, |acc, k| {
        f.add(acc, f.mul(f.mul(w[k], w[inverse[k]]), f.inv(sizes[k])))
    });
    if s == 0 {
        return Err(Error::LiftFailure("degree normalisation vanished".into()));
    }
    let d2 = f.mul(f.reduce(order), f.inv(s));
    (1..)
        .take_while(|d: &u64| d * d <= order)
        .find(|&d| f.mul(d, d) == d2)
        .map(|d| d as i64)
        .ok_or_else(|| Error::LiftFailure("no integer degree matches".into()))
}

/// Recovers the integer value `χ(g)` from `χ(g^j) mod p`, `j = 0..o`.
///
/// The eigenvalue multiplicities `m_l` of `ρ(g)` at `ζ^l` are integers in
/// `0..=χ(1)`; for a rational character they depend only on `gcd(l, o)`,
/// and summing each Galois orbit of roots of unity gives a Möbius value.
fn lift_value(values: &[u64], powers: &[usize], degree: i64, f: Field) -> Result<i64> {
    let o = powers.len() as u64;
    let zeta = f.root_of_unity(o);
    let zeta_inv = f.inv(zeta);
    let o_inv = f.inv(o);
    let mult: Vec<i64> = (0..o)
        .map(|l| {
            let step = f.pow(zeta_inv, l);
            let mut z = 1;
            let mut acc = 0;
            for &c in powers {
                acc = f.add(acc, f.mul(values[c], z));
                z = f.mul(z, step);
            }
            f.mul(acc, o_inv)
        })
        .map(|m| m as i64)
        .collect();
    if mult.iter().any(|&m| m > degree) || mult.iter().sum::<i64>() != degree {
        return Err(Error::LiftFailure(format!(
            "eigenvalue multiplicities {mult:?} inconsistent with degree {degree}"
        )));
    }
    let mut value = 0;
    for l in 0..o {
        let c = l.gcd(&o);
        if mult[l as usize] != mult[(c % o) as usize] {
            return Err(Error::LiftFailure("character value is not rational".into()));
        }
        if l == c % o {
            value += mult[l as usize] * mobius(o / c);
        }
    }
    let residue = values[powers[1 % powers.len()]];
    if f.symmetric(residue) != value {
        return Err(Error::LiftFailure(format!(
            "lifted value {value} disagrees with its residue"
        )));
    }
    Ok(value)
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            result = -result;
        }
        d += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}
