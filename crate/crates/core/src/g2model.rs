//! The split model L = {M_(a,x,y)} ⊂ gl₇ with a ∈ sl₃ and x, y ∈ F³,
//!
//! ```text
//! M_(a,x,y) = [ 0   −2yᵀ  −2xᵀ ]
//!             [ x    a     l_y ]
//!             [ y    l_x  −aᵀ  ]
//! ```
//!
//! where l_x z = x × z, its root and weight decompositions, and the
//! ℤ₃-graded model sl₃ ⊕ U ⊕ U*.

use std::collections::BTreeMap;
use std::fmt;

use crate::derivsolver::AlgebraTable;
use crate::numerics::{q, unit_vec, vec_add, vec_scale, QMatrix, Rational, Subspace, Zero};
use crate::octonion::{cross3, space, OctonionKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum G2Error {
    #[error("matrix is not of the form M_(a,x,y): {0}")]
    ClosureViolation(String),
    #[error("Cartan elements do not commute or are not diagonal")]
    NotSimultaneouslyDiagonalizable,
}

/// Matrix of z ↦ x × z on F³.
pub fn l3(x: &[Rational]) -> QMatrix {
    let cols: Vec<Vec<Rational>> = (0..3).map(|j| cross3(x, &unit_vec(3, j))).collect();
    QMatrix::from_cols(&cols)
}

/// sl₃ projection a − tr(a)/3·I.
pub fn pr_sl3(a: &QMatrix) -> QMatrix {
    let t = a.trace() / q(3);
    a.sub(&QMatrix::identity(3).scale(&t))
}

fn outer(x: &[Rational], y: &[Rational]) -> QMatrix {
    QMatrix::from_fn(3, 3, |i, j| &x[i] * &y[j])
}

#[derive(Clone, Debug, PartialEq)]
pub struct SplitElement {
    pub a: QMatrix,
    pub x: Vec<Rational>,
    pub y: Vec<Rational>,
    matrix: QMatrix,
}

impl SplitElement {
    pub fn new(a: QMatrix, x: Vec<Rational>, y: Vec<Rational>) -> Result<Self, G2Error> {
        if !a.trace().is_zero() {
            return Err(G2Error::ClosureViolation("a is not traceless".into()));
        }
        let matrix = realize(&a, &x, &y);
        Ok(Self { a, x, y, matrix })
    }

    pub fn zero() -> Self {
        Self::new(QMatrix::zeros(3, 3), vec![q(0); 3], vec![q(0); 3]).expect("zero is traceless")
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    /// Reads (a,x,y) back from a 7×7 matrix, failing if the block shape is
    /// wrong.
    pub fn from_matrix(m: &QMatrix) -> Result<Self, G2Error> {
        let x: Vec<Rational> = (1..4).map(|i| m[(i, 0)].clone()).collect();
        let y: Vec<Rational> = (4..7).map(|i| m[(i, 0)].clone()).collect();
        let a = QMatrix::from_fn(3, 3, |i, j| m[(i + 1, j + 1)].clone());
        let e = Self::new(a, x, y)?;
        if &e.matrix != m {
            return Err(G2Error::ClosureViolation("block pattern does not match".into()));
        }
        Ok(e)
    }

    /// Coordinates in the basis E12, E13, E21, E23, E31, E32, H1, H2, x₁..₃, y₁..₃
    /// with H1 = E11 − E22 and H2 = E22 − E33.
    pub fn coords(&self) -> Vec<Rational> {
        let a = &self.a;
        let mut c: Vec<Rational> = OFF_DIAGONAL.iter().map(|&(i, j)| a[(i, j)].clone()).collect();
        c.push(a[(0, 0)].clone());
        c.push(-a[(2, 2)].clone());
        c.extend(self.x.iter().cloned());
        c.extend(self.y.iter().cloned());
        c
    }

    pub fn from_coords(c: &[Rational]) -> Self {
        let mut a = QMatrix::zeros(3, 3);
        for (k, &(i, j)) in OFF_DIAGONAL.iter().enumerate() {
            a[(i, j)] = c[k].clone();
        }
        a[(0, 0)] = c[6].clone();
        a[(1, 1)] = &c[7] - &c[6];
        a[(2, 2)] = -c[7].clone();
        Self::new(a, c[8..11].to_vec(), c[11..14].to_vec()).expect("traceless by construction")
    }

    pub fn basis(i: usize) -> Self {
        Self::from_coords(&unit_vec(14, i))
    }

    pub fn bracket(&self, o: &Self) -> Result<Self, G2Error> {
        Self::from_matrix(&self.matrix.commutator(&o.matrix))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::from_coords(&vec_add(&self.coords(), &o.coords()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_coords(&vec_scale(&self.coords(), s))
    }
}

const OFF_DIAGONAL: [(usize, usize); 6] = [(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)];

pub const BASIS_LABELS: [&str; 14] =
    ["E12", "E13", "E21", "E23", "E31", "E32", "H1", "H2", "x1", "x2", "x3", "y1", "y2", "y3"];

fn realize(a: &QMatrix, x: &[Rational], y: &[Rational]) -> QMatrix {
    let (lx, ly) = (l3(x), l3(y));
    let mut m = QMatrix::zeros(7, 7);
    for i in 0..3 {
        m[(0, 1 + i)] = &y[i] * q(-2);
        m[(0, 4 + i)] = &x[i] * q(-2);
        m[(1 + i, 0)] = x[i].clone();
        m[(4 + i, 0)] = y[i].clone();
        for j in 0..3 {
            m[(1 + i, 1 + j)] = a[(i, j)].clone();
            m[(1 + i, 4 + j)] = ly[(i, j)].clone();
            m[(4 + i, 1 + j)] = lx[(i, j)].clone();
            m[(4 + i, 4 + j)] = -a[(j, i)].clone();
        }
    }
    m
}

/// The 14 basis matrices.
pub fn basis_matrices() -> Vec<QMatrix> {
    (0..14).map(|i| SplitElement::basis(i).matrix).collect()
}

/// Structure constants of L in the basis of [`SplitElement::coords`].
pub fn structure_table() -> Result<AlgebraTable, G2Error> {
    let basis: Vec<SplitElement> = (0..14).map(SplitElement::basis).collect();
    let mut rows = Vec::with_capacity(196);
    for u in &basis {
        for v in &basis {
            rows.push(u.bracket(v)?.coords());
        }
    }
    Ok(AlgebraTable::from_fn(14, |i, j| rows[i * 14 + j].clone()))
}

/// Killing signature (n_minus, n_plus) of a Lie algebra table.
pub fn killing_signature(t: &AlgebraTable) -> Result<(usize, usize), crate::numerics::NumericsError> {
    t.killing_signature()
}

/// Root-space labels: εᵢ − εⱼ, ±εᵢ, or 0 (indices 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootTag {
    Zero,
    Diff(usize, usize),
    Plus(usize),
    Minus(usize),
}

impl RootTag {
    /// Coefficients (c₁,c₂,c₃) of the functional Σ cᵢεᵢ.
    pub fn functional(self) -> [i64; 3] {
        let mut c = [0; 3];
        match self {
            RootTag::Zero => {}
            RootTag::Diff(i, j) => {
                c[i - 1] = 1;
                c[j - 1] = -1;
            }
            RootTag::Plus(i) => c[i - 1] = 1,
            RootTag::Minus(i) => c[i - 1] = -1,
        }
        c
    }

    pub fn eval(self, s: &[Rational]) -> Rational {
        self.functional().iter().zip(s).map(|(&c, x)| q(c) * x).sum()
    }

    pub fn all_roots() -> Vec<RootTag> {
        let mut v = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                if i != j {
                    v.push(RootTag::Diff(i, j));
                }
            }
        }
        v.extend((1..=3).map(RootTag::Plus));
        v.extend((1..=3).map(RootTag::Minus));
        v
    }

    pub fn weights() -> Vec<RootTag> {
        let mut v = vec![RootTag::Zero];
        v.extend((1..=3).map(RootTag::Plus));
        v.extend((1..=3).map(RootTag::Minus));
        v
    }
}

impl fmt::Display for RootTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootTag::Zero => write!(f, "0"),
            RootTag::Diff(i, j) => write!(f, "e{i}-e{j}"),
            RootTag::Plus(i) => write!(f, "e{i}"),
            RootTag::Minus(i) => write!(f, "-e{i}"),
        }
    }
}

/// (s₁,s₂,s₃) of a diagonal Cartan element, or an error if `h` is not
/// diagonal.
fn cartan_values(h: &SplitElement) -> Result<Vec<Rational>, G2Error> {
    let diag = (0..3).all(|i| (0..3).all(|j| i == j || h.a[(i, j)].is_zero()));
    let flat = h.x.iter().chain(&h.y).all(Zero::is_zero);
    if !diag || !flat {
        return Err(G2Error::NotSimultaneouslyDiagonalizable);
    }
    Ok((0..3).map(|i| h.a[(i, i)].clone()).collect())
}

fn common_eigenspaces(
    ops: &[QMatrix],
    values: &[Vec<Rational>],
    tags: &[RootTag],
    dim: usize,
) -> BTreeMap<RootTag, Vec<Vec<Rational>>> {
    let mut out = BTreeMap::new();
    for &tag in tags {
        let mut rows: Vec<Vec<Rational>> = Vec::new();
        for (op, s) in ops.iter().zip(values) {
            let shifted = op.sub(&QMatrix::identity(dim).scale(&tag.eval(s)));
            rows.extend((0..dim).map(|r| shifted.row(r).to_vec()));
        }
        let space = QMatrix::from_rows(rows).nullspace();
        if !space.is_empty() {
            out.insert(tag, space);
        }
    }
    out
}

/// Simultaneous eigenspaces of ad h for the given Cartan elements, keyed by
/// root tag; vectors are coordinates in the standard 14-basis.
pub fn root_decomposition(hs: &[SplitElement]) -> Result<BTreeMap<RootTag, Vec<Vec<Rational>>>, G2Error> {
    let table = structure_table()?;
    let mut values = Vec::new();
    let mut ops = Vec::new();
    for h in hs {
        values.push(cartan_values(h)?);
        let c = h.coords();
        let ad = (0..14).fold(QMatrix::zeros(14, 14), |acc, i| acc.add(&table.left_mul(i).scale(&c[i])));
        ops.push(ad);
    }
    for a in &ops {
        for b in &ops {
            if !a.commutator(b).is_zero() {
                return Err(G2Error::NotSimultaneouslyDiagonalizable);
            }
        }
    }
    let mut tags = RootTag::all_roots();
    tags.push(RootTag::Zero);
    Ok(common_eigenspaces(&ops, &values, &tags, 14))
}

/// H1 and H2 as split elements.
pub fn cartan_basis() -> [SplitElement; 2] {
    [SplitElement::basis(6), SplitElement::basis(7)]
}

/// Weight spaces of F⁷ under the Cartan subalgebra acting by matrices.
pub fn weight_decomposition() -> Result<BTreeMap<RootTag, Vec<Vec<Rational>>>, G2Error> {
    let hs = cartan_basis();
    let values = hs.iter().map(cartan_values).collect::<Result<Vec<_>, _>>()?;
    let ops: Vec<QMatrix> = hs.iter().map(|h| h.matrix.clone()).collect();
    Ok(common_eigenspaces(&ops, &values, &RootTag::weights(), 7))
}

/// Weights λ such that λ + αᵢ is not a weight for the simple roots
/// α₁ = ε₂, α₂ = ε₁ − ε₂.
pub fn maximal_weights(weights: &[RootTag]) -> Vec<RootTag> {
    let key = |f: [i64; 3]| [f[0] - f[2], f[1] - f[2]];
    let present: Vec<[i64; 2]> = weights.iter().map(|w| key(w.functional())).collect();
    let simple = [[0, 1, 0], [1, -1, 0]];
    weights
        .iter()
        .copied()
        .filter(|w| {
            simple.iter().all(|a| {
                let f = w.functional();
                let sum = [f[0] + a[0], f[1] + a[1], f[2] + a[2]];
                !present.contains(&key(sum))
            })
        })
        .collect()
}

/// Whether n(ux, y) + n(x, uy) = 0 for the split norm.
pub fn is_skew_for_norm(u: &QMatrix) -> bool {
    let n = space(OctonionKind::Split).norm_matrix();
    u.transpose().mul(n).add(&n.mul(u)).is_zero()
}

/// Dimension of the ideal generated by basis element `i`.
pub fn generated_ideal_dim(t: &AlgebraTable, i: usize) -> usize {
    let n = t.dim();
    let mut span = Subspace::new(n, &[unit_vec(n, i)]);
    loop {
        let mut vs = span.basis().to_vec();
        for b in span.basis() {
            for j in 0..n {
                vs.push(t.mul(&unit_vec(n, j), b));
            }
        }
        let next = Subspace::new(n, &vs);
        if next.dim() == span.dim() {
            return span.dim();
        }
        span = next;
    }
}

/// Element of sl₃ ⊕ U ⊕ U*, where `v` stands for the row vector vᵀ.
#[derive(Clone, Debug, PartialEq)]
pub struct Z3Element {
    pub a: QMatrix,
    pub u: Vec<Rational>,
    pub v: Vec<Rational>,
}

impl Z3Element {
    pub fn zero() -> Self {
        Self { a: QMatrix::zeros(3, 3), u: vec![q(0); 3], v: vec![q(0); 3] }
    }

    pub fn from_split(e: &SplitElement) -> Self {
        Self { a: e.a.clone(), u: e.x.clone(), v: e.y.clone() }
    }

    pub fn to_split(&self) -> SplitElement {
        SplitElement::new(self.a.clone(), self.u.clone(), self.v.clone()).expect("sl3 part is traceless")
    }

    /// ℤ₃ degree if homogeneous and nonzero.
    pub fn degree(&self) -> Option<u8> {
        let parts = [!self.a.is_zero(), self.u.iter().any(|c| !c.is_zero()), self.v.iter().any(|c| !c.is_zero())];
        match parts {
            [true, false, false] => Some(0),
            [false, true, false] => Some(1),
            [false, false, true] => Some(2),
            _ => None,
        }
    }
}

/// The graded bracket: sl₃ acts naturally on U and dually on U*,
/// [x,y] = (2x×y)ᵀ, [xᵀ,yᵀ] = 2x×y and [x,yᵀ] = −3 pr_sl₃(xyᵀ).
pub fn z3_bracket(p: &Z3Element, r: &Z3Element) -> Z3Element {
    let two = q(2);
    let three = q(3);
    let a = p
        .a
        .commutator(&r.a)
        .add(&pr_sl3(&outer(&p.u, &r.v)).scale(&-three.clone()))
        .add(&pr_sl3(&outer(&r.u, &p.v)).scale(&three));
    let u = vec_add(
        &vec_add(&p.a.mul_vec(&r.u), &vec_scale(&r.a.mul_vec(&p.u), &q(-1))),
        &vec_scale(&cross3(&p.v, &r.v), &two),
    );
    let v = vec_add(
        &vec_add(&vec_scale(&p.a.transpose().mul_vec(&r.v), &q(-1)), &r.a.transpose().mul_vec(&p.v)),
        &vec_scale(&cross3(&p.u, &r.u), &two),
    );
    Z3Element { a, u, v }
}

/// Nonzero structure constants as JSON records.
pub fn structure_constants_json(t: &AlgebraTable) -> serde_json::Value {
    let entries: Vec<serde_json::Value> = t
        .nonzero()
        .map(|(i, j, k, c)| {
            serde_json::json!({
                "i": BASIS_LABELS[i], "j": BASIS_LABELS[j], "k": BASIS_LABELS[k], "c": c.to_string()
            })
        })
        .collect();
    serde_json::json!({ "basis": BASIS_LABELS, "brackets": entries })
}
