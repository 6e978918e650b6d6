use std::collections::HashSet;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{QMatrix, QVector};

use super::difference::avoiding_differences;

/// How a Z-set was assembled.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum ZNode {
    /// {s·v + x : s ∈ S, x ∈ X₁ × ⋯ × X_d} with v = (1, a₂, …, a_{d−1}, 0).
    Base {
        v: QVector,
        #[serde(with = "rational::seq")]
        s: Vec<Rational>,
        #[serde(with = "rational::seq2")]
        x: Vec<Vec<Rational>>,
    },
    /// {s·v : s ∈ S}.
    Line {
        v: QVector,
        #[serde(with = "rational::seq")]
        s: Vec<Rational>,
    },
    /// {s·v + z : s ∈ S, z ∈ inner}.
    Inductive {
        v: QVector,
        #[serde(with = "rational::seq")]
        s: Vec<Rational>,
        inner: Box<ZNode>,
    },
    /// {M·z : z ∈ inner} for invertible M.
    Linear { matrix: QMatrix, inner: Box<ZNode> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZSet {
    tree: ZNode,
    points: Vec<QVector>,
}

#[derive(Deserialize)]
struct RawZSet {
    tree: ZNode,
    #[serde(default)]
    points: Option<Vec<QVector>>,
}

impl<'de> Deserialize<'de> for ZSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawZSet::deserialize(d)?;
        let z = ZSet::from_tree(raw.tree).map_err(serde::de::Error::custom)?;
        match raw.points {
            Some(p) if p != z.points => Err(serde::de::Error::custom(
                "points do not match the construction tree",
            )),
            _ => Ok(z),
        }
    }
}

fn distinct(values: &[Rational], what: &str) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Invalid(format!("{what} is empty")));
    }
    let set: HashSet<&Rational> = values.iter().collect();
    if set.len() != values.len() {
        return Err(Error::Invalid(format!("{what} has repeated values")));
    }
    Ok(())
}

fn checked_cardinality(points: Vec<QVector>, expected: usize) -> Result<Vec<QVector>> {
    let set: HashSet<&QVector> = points.iter().collect();
    if points.len() != expected || set.len() != expected {
        return Err(Error::Internal(format!(
            "Z-set has {} distinct points, expected {expected}",
            set.len()
        )));
    }
    Ok(points)
}

impl ZSet {
    /// Rebuilds and re-validates a tree.
    pub fn from_tree(tree: ZNode) -> Result<ZSet> {
        match tree {
            ZNode::Base { v, s, x } => z_set_base(v.dim(), v, s, x),
            ZNode::Line { v, s } => z_set_line(v, s),
            ZNode::Inductive { v, s, inner } => z_set_inductive(ZSet::from_tree(*inner)?, v, s),
            ZNode::Linear { matrix, inner } => z_set_linear(matrix, ZSet::from_tree(*inner)?),
        }
    }

    pub fn tree(&self) -> &ZNode {
        &self.tree
    }

    pub fn points(&self) -> &[QVector] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.points[0].dim()
    }

    /// The size predicted by the factor sizes alone.
    pub fn product_formula(&self) -> usize {
        fn go(n: &ZNode) -> usize {
            match n {
                ZNode::Base { s, x, .. } => s.len() * x.iter().map(Vec::len).product::<usize>(),
                ZNode::Line { s, .. } => s.len(),
                ZNode::Inductive { s, inner, .. } => s.len() * go(inner),
                ZNode::Linear { inner, .. } => go(inner),
            }
        }
        go(&self.tree)
    }

    /// Largest |coordinate| over all points.
    pub fn linf_radius(&self) -> Rational {
        self.points
            .iter()
            .map(QVector::max_abs)
            .fold(rational::zero(), |a, b| if b > a { b } else { a })
    }
}

/// Z = {s·v + x : s ∈ S, x ∈ ∏Xᵢ}; requires (S − S) ∩ (a₂⁻¹X₂ − a₂⁻¹X₂) = {0}.
pub fn z_set_base(d: usize, v: QVector, s: Vec<Rational>, x: Vec<Vec<Rational>>) -> Result<ZSet> {
    if d < 3 {
        return Err(Error::Invalid("the base construction needs d ≥ 3".into()));
    }
    if v.dim() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: v.dim(),
        });
    }
    if x.len() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: x.len(),
        });
    }
    if !v[0].is_one() || !v[d - 1].is_zero() || v[1].is_zero() {
        return Err(Error::InvalidEscapeDirection);
    }
    distinct(&s, "S")?;
    for (i, xi) in x.iter().enumerate() {
        distinct(xi, &format!("X{}", i + 1))?;
    }
    let a2 = &v[1];
    let scaled: Vec<Rational> = x[1].iter().map(|t| t / a2).collect();
    let forbidden = super::difference::nonzero_differences(&scaled);
    for (p, q) in s.iter().tuple_combinations() {
        if forbidden.contains(&(p - q)) {
            return Err(Error::DisjointnessPreconditionFailed(format!(
                "{} − {} is a difference of a₂⁻¹X₂",
                rational::to_canonical(p),
                rational::to_canonical(q)
            )));
        }
    }
    let mut points = Vec::new();
    for si in &s {
        let sv = v.scale(si);
        for combo in x.iter().map(|xi| xi.iter()).multi_cartesian_product() {
            let xv = QVector::new(combo.into_iter().cloned().collect());
            points.push(&sv + &xv);
        }
    }
    let expected = s.len() * x.iter().map(Vec::len).product::<usize>();
    let points = checked_cardinality(points, expected)?;
    Ok(ZSet {
        tree: ZNode::Base { v, s, x },
        points,
    })
}

/// Z = {s·v : s ∈ S}.
pub fn z_set_line(v: QVector, s: Vec<Rational>) -> Result<ZSet> {
    if v.is_zero() {
        return Err(Error::ZeroVector(0));
    }
    distinct(&s, "S")?;
    let points = s.iter().map(|si| v.scale(si)).collect();
    Ok(ZSet {
        tree: ZNode::Line { v, s },
        points,
    })
}

/// Z = Y + Z̄ with Y = {s·v}; requires (Y − Y) ∩ (Z̄ − Z̄) = {0}.
pub fn z_set_inductive(inner: ZSet, v: QVector, s: Vec<Rational>) -> Result<ZSet> {
    if v.dim() != inner.dim() {
        return Err(Error::DimensionMismatch {
            expected: inner.dim(),
            got: v.dim(),
        });
    }
    if v.is_zero() {
        return Err(Error::ZeroVector(0));
    }
    distinct(&s, "S")?;
    let members: HashSet<&QVector> = inner.points.iter().collect();
    for (p, q) in s.iter().tuple_combinations() {
        let w = v.scale(&(p - q));
        // w ∈ Z̄ − Z̄ iff some z has z − w ∈ Z̄
        if inner.points.iter().any(|z| members.contains(&(z - &w))) {
            return Err(Error::DisjointnessPreconditionFailed(format!(
                "({} − {})·v is a difference of the inner set",
                rational::to_canonical(p),
                rational::to_canonical(q)
            )));
        }
    }
    let mut points = Vec::with_capacity(s.len() * inner.len());
    for si in &s {
        let y = v.scale(si);
        points.extend(inner.points.iter().map(|z| &y + z));
    }
    let expected = s.len() * inner.len();
    let points = checked_cardinality(points, expected)?;
    Ok(ZSet {
        tree: ZNode::Inductive {
            v,
            s,
            inner: Box::new(inner.tree),
        },
        points,
    })
}

/// Z = M·Z̄ for an invertible M.
pub fn z_set_linear(matrix: QMatrix, inner: ZSet) -> Result<ZSet> {
    let d = inner.dim();
    if matrix.nrows() != d || matrix.ncols() != d {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: matrix.nrows(),
        });
    }
    if matrix.rank() != d {
        return Err(Error::DependentVectors);
    }
    let points = inner.points.iter().map(|z| matrix.mul_vec(z)).collect();
    Ok(ZSet {
        tree: ZNode::Linear {
            matrix,
            inner: Box::new(inner.tree),
        },
        points,
    })
}

/// Sizes (|X₁|, |X₂| = ⋯ = |X_d|, |S|) for which the slice counting
/// defeats every cover whose parts meet each of their hyperplanes at most
/// t times, when `extra` of the directions are orthogonal to v.
pub fn base_sizes(d: usize, extra: usize, t: usize) -> (usize, usize, usize) {
    let xi = t + 1;
    let x1 = t * xi + 1;
    let s = t * xi.pow(d as u32 - 1) * extra + 1;
    (x1, xi, s)
}

fn spaced(n: usize, half_width: &Rational) -> Vec<Rational> {
    // j·w/n for j < n stays inside (−w, w)
    (0..n)
        .map(|j| half_width * rational::ratio(j as i64, n as i64))
        .collect()
}

fn two_supported(v: &QVector) -> bool {
    v.coords().iter().filter(|c| !c.is_zero()).count() >= 2
}

/// A null vector of `rows` with at least two nonzero coordinates.
fn spread_null_vector(rows: Vec<QVector>, d: usize) -> Option<QVector> {
    let null = if rows.is_empty() {
        (0..d).map(|i| QVector::basis(d, i)).collect()
    } else {
        QMatrix::from_rows(rows).ok()?.null_space()
    };
    if let Some(v) = null.iter().find(|v| two_supported(v)) {
        return Some(v.clone());
    }
    if null.len() >= 2 {
        return Some(&null[0] + &null[1]);
    }
    None
}

/// Z ⊂ (−ε, ε)^d such that no translate p + Z is covered by sets Aₖ
/// meeting every hyperplane orthogonal to uₖ in at most t points.
///
/// Up to 2(d − 1) directions use the product construction (after a change
/// of basis); every further d − 1 directions add one inductive layer.
pub fn escape_zset(dirs: &[QVector], eps: &Rational, t: usize) -> Result<ZSet> {
    let d = dirs.first().map(QVector::dim).ok_or(Error::EmptyInput)?;
    for (i, u) in dirs.iter().enumerate() {
        if u.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: u.dim(),
            });
        }
        if u.is_zero() {
            return Err(Error::ZeroVector(i));
        }
    }
    if d < 3 {
        return Err(Error::NoEscapePlan("needs d ≥ 3".into()));
    }
    if !eps.is_positive() {
        return Err(Error::Invalid("epsilon must be positive".into()));
    }
    if t == 0 {
        return Err(Error::Invalid("multiplicity bound must be positive".into()));
    }
    build(dirs, eps, t, d)
}

fn build(dirs: &[QVector], eps: &Rational, t: usize, d: usize) -> Result<ZSet> {
    if dirs.len() <= 2 * (d - 1) {
        return base_plan(dirs, eps, t, d);
    }
    let split = dirs.len() - (d - 1);
    let half = eps / rational::int(2);
    let inner = build(&dirs[..split], &half, t, d)?;
    let v = QMatrix::from_rows(dirs[split..].to_vec())?
        .null_space()
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoEscapePlan("no vector orthogonal to the top directions".into()))?;

    // r with r·v ∈ Z̄ − Z̄
    let lead = v
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("nonzero");
    let mut forbidden = HashSet::new();
    for z in inner.points() {
        for w in inner.points() {
            if z == w {
                continue;
            }
            let diff = z - w;
            let r = &diff[lead] / &v[lead];
            if v.scale(&r) == diff {
                forbidden.insert(r);
            }
        }
    }
    let size = t * inner.len() * (d - 1) + 1;
    let s = avoiding_differences(&forbidden, &(&half / v.max_abs()), size)?;
    z_set_inductive(inner, v, s)
}

fn base_plan(dirs: &[QVector], eps: &Rational, t: usize, d: usize) -> Result<ZSet> {
    let all = QMatrix::from_rows(dirs.to_vec())?;
    if all.rank() < d {
        let v = all.null_space().swap_remove(0);
        let s = avoiding_differences(&HashSet::new(), &(eps / v.max_abs()), t * dirs.len() + 1)?;
        return z_set_line(v, s);
    }

    let mut basis: Vec<usize> = Vec::with_capacity(d);
    for (i, u) in dirs.iter().enumerate() {
        let mut rows: Vec<QVector> = basis.iter().map(|&b| dirs[b].clone()).collect();
        rows.push(u.clone());
        if QMatrix::from_rows(rows)?.rank() == basis.len() + 1 {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    let m = QMatrix::from_rows(basis.iter().map(|&b| dirs[b].clone()).collect())?;
    let m_inv_t = m.inverse()?.transpose();
    // in w = Mz the other directions become ū = M⁻ᵀu
    let others: Vec<QVector> = (0..dirs.len())
        .filter(|i| !basis.contains(i))
        .map(|i| m_inv_t.mul_vec(&dirs[i]))
        .collect();

    let (j, v) = (0..d)
        .find_map(|j| {
            let mut rows = vec![QVector::basis(d, j)];
            rows.extend(others.iter().cloned());
            spread_null_vector(rows, d).map(|v| (j, v))
        })
        .ok_or_else(|| Error::NoEscapePlan("no admissible escape direction".into()))?;

    // coordinates reordered as (a, b, rest…, j) with v_a, v_b ≠ 0
    let nz: Vec<usize> = (0..d).filter(|&i| !v[i].is_zero()).collect();
    let mut order = vec![nz[0], nz[1]];
    order.extend((0..d).filter(|i| *i != nz[0] && *i != nz[1] && *i != j));
    order.push(j);
    let perm = QMatrix::from_rows(order.iter().map(|&i| QVector::basis(d, i)).collect())?;
    let pv = perm.mul_vec(&v);
    let pv = pv.scale(&pv[0].recip());

    let to_z = perm.mul(&m)?.inverse()?;
    let eps_bar = eps / to_z.linf_norm();
    let half = &eps_bar / rational::int(2);
    let nu = rational::max_abs(pv.coords()[1..d - 1].iter()).max(rational::one());

    let (x1, xi, ns) = base_sizes(d, others.len(), t);
    let mut x = vec![spaced(x1, &half)];
    for _ in 1..d {
        x.push(spaced(xi, &half));
    }
    let scaled: Vec<Rational> = x[1].iter().map(|c| c / &pv[1]).collect();
    let forbidden = super::difference::nonzero_differences(&scaled);
    let s = avoiding_differences(&forbidden, &(&half / &nu), ns)?;
    let inner = z_set_base(d, pv, s, x)?;
    z_set_linear(to_z, inner)
}
