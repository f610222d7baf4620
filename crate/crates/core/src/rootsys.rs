//! Root systems rebuilt from Cartan matrices by induction on height.
//!
//! Convention: `C[i][j] = ⟨αᵢ,αⱼ⟩ = 2(αᵢ,αⱼ)/(αⱼ,αⱼ)`, so for G₂ the matrix is
//! `[[2,−1],[−3,2]]` with α₁ short. Arrows in the Dynkin diagrams point from
//! long to short roots.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;

use serde_json::json;

use crate::numerics::{q, QMatrix, Rational};

/// Largest height explored before a matrix is declared not of finite type.
pub const MAX_HEIGHT: i64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RootError {
    #[error("unknown Dynkin type {0}")]
    UnknownType(String),
    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),
    #[error("height induction exceeded {0}; not a finite type")]
    NotFiniteType(i64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, RootError> {
        let n = entries.len();
        let bad = |m: String| Err(RootError::InvalidCartan(m));
        if n == 0 || entries.iter().any(|r| r.len() != n) {
            return bad("not square".into());
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return bad(format!("diagonal entry {i} is not 2"));
            }
            for j in 0..n {
                let c = entries[i][j];
                if i != j && !(-3..=0).contains(&c) {
                    return bad(format!("entry ({i},{j}) = {c}"));
                }
                if (c == 0) != (entries[j][i] == 0) {
                    return bad(format!("zero pattern not symmetric at ({i},{j})"));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// ⟨β, αⱼ⟩ for β given in simple-root coordinates.
    pub fn pairing(&self, beta: &[i64], j: usize) -> i64 {
        beta.iter().enumerate().map(|(i, b)| b * self.entries[i][j]).sum()
    }
}

/// Cartan matrix of a finite Dynkin type. Node numbering follows the usual
/// diagrams: Bₙ has αₙ short, Cₙ has αₙ long, F₄ has α₁,α₂ short, the
/// branch node of Eₙ is attached to α₃, α₄, α₅ for n = 6, 7, 8.
pub fn cartan_of_type(family: char, rank: usize) -> Result<CartanMatrix, RootError> {
    let unknown = || RootError::UnknownType(format!("{family}{rank}"));
    let n = rank;
    let mut c = vec![vec![0i64; n]; n];
    let chain = |c: &mut Vec<Vec<i64>>, len: usize| {
        for i in 0..n {
            c[i][i] = 2;
        }
        for i in 0..len.saturating_sub(1) {
            c[i][i + 1] = -1;
            c[i + 1][i] = -1;
        }
    };
    match (family.to_ascii_uppercase(), n) {
        ('A', n) if n >= 1 => chain(&mut c, n),
        ('B', n) if n >= 2 => {
            chain(&mut c, n);
            c[n - 2][n - 1] = -2;
        }
        ('C', n) if n >= 3 => {
            chain(&mut c, n);
            c[n - 1][n - 2] = -2;
        }
        ('D', n) if n >= 4 => {
            chain(&mut c, n - 1);
            c[n - 1][n - 3] = -1;
            c[n - 3][n - 1] = -1;
        }
        ('E', n @ 6..=8) => {
            chain(&mut c, n - 1);
            let branch = n - 4;
            c[n - 1][branch] = -1;
            c[branch][n - 1] = -1;
        }
        ('F', 4) => {
            chain(&mut c, 4);
            c[2][1] = -2;
        }
        ('G', 2) => {
            chain(&mut c, 2);
            c[1][0] = -3;
        }
        _ => return Err(unknown()),
    }
    CartanMatrix::new(c)
}

/// Parses strings like `"G2"` or `"e8"`.
pub fn parse_type(s: &str) -> Result<CartanMatrix, RootError> {
    let mut ch = s.trim().chars();
    let family = ch.next().ok_or_else(|| RootError::UnknownType(s.to_string()))?;
    let rank: usize = ch.as_str().parse().map_err(|_| RootError::UnknownType(s.to_string()))?;
    cartan_of_type(family, rank)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    pub fn neg(&self) -> Root {
        Root { coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coords
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match c {
                1 => format!("a{}", i + 1),
                -1 => format!("-a{}", i + 1),
                c => format!("{c}a{}", i + 1),
            })
            .collect();
        write!(f, "{}", terms.join("+").replace("+-", "-"))
    }
}

/// Full root system: positive roots sorted by height then coordinates,
/// followed by their negatives.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: CartanMatrix,
    pub positive: Vec<Root>,
}

impl RootSystem {
    pub fn roots(&self) -> Vec<Root> {
        let mut all = self.positive.clone();
        all.extend(self.positive.iter().map(Root::neg));
        all
    }

    pub fn heights(&self) -> Vec<i64> {
        self.positive.iter().map(Root::height).collect()
    }

    pub fn to_json(&self, type_name: &str) -> serde_json::Value {
        let roots: Vec<_> = self
            .roots()
            .iter()
            .map(|r| json!({ "coords": r.coords, "height": r.height() }))
            .collect();
        json!({ "type": type_name, "roots": roots })
    }
}

/// Rebuilds Φ from C: every positive non-simple root is β+αᵢ for a lower
/// root β, and β+αᵢ is a root iff q > 0 where ⟨β,αᵢ⟩ = r − q and r is the
/// length of the αᵢ-string below β.
pub fn roots_from_cartan(c: &CartanMatrix) -> Result<RootSystem, RootError> {
    roots_with_bound(c, MAX_HEIGHT)
}

pub fn roots_with_bound(c: &CartanMatrix, max_height: i64) -> Result<RootSystem, RootError> {
    let n = c.rank();
    let mut known: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n).map(|i| unit(n, i)).collect();
    known.extend(layer.iter().cloned());
    let mut positive = layer.clone();
    let mut height = 1;
    while !layer.is_empty() {
        if height >= max_height {
            return Err(RootError::NotFiniteType(max_height));
        }
        let mut next = BTreeMap::new();
        for beta in &layer {
            for i in 0..n {
                let mut down = beta.clone();
                let mut r = 0;
                loop {
                    down[i] -= 1;
                    if known.contains(&down) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let qv = r - c.pairing(beta, i);
                if qv > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    next.insert(up, ());
                }
            }
        }
        layer = next.into_keys().collect();
        known.extend(layer.iter().cloned());
        positive.extend(layer.iter().cloned());
        height += 1;
    }
    let mut positive: Vec<Root> = positive.into_iter().map(|coords| Root { coords }).collect();
    positive.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.coords.cmp(&a.coords)));
    Ok(RootSystem { cartan: c.clone(), positive })
}

fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i)).collect()
}

/// Symmetrized inner products (αᵢ,αⱼ) with short roots of squared length 2.
#[derive(Clone, Debug)]
pub struct InnerForm {
    pub gram: QMatrix,
}

impl InnerForm {
    pub fn new(c: &CartanMatrix) -> Self {
        let n = c.rank();
        // relative lengths (αᵢ,αᵢ)/(αⱼ,αⱼ) = Cᵢⱼ/Cⱼᵢ along edges, per component
        let mut len: Vec<Option<Rational>> = vec![None; n];
        for start in 0..n {
            if len[start].is_some() {
                continue;
            }
            let mut comp = vec![start];
            len[start] = Some(q(1));
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if i != j && c.get(i, j) != 0 && len[j].is_none() {
                        let li = len[i].clone().unwrap();
                        len[j] = Some(li * Rational::new(c.get(j, i).into(), c.get(i, j).into()));
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            let min = comp.iter().map(|&k| len[k].clone().unwrap()).min().unwrap();
            for &k in &comp {
                len[k] = Some(len[k].clone().unwrap() / &min * q(2));
            }
        }
        let len: Vec<Rational> = len.into_iter().map(Option::unwrap).collect();
        let gram = QMatrix::from_fn(n, n, |i, j| q(c.get(i, j)) * &len[j] / q(2));
        Self { gram }
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Rational {
        let av: Vec<Rational> = a.iter().map(|&x| q(x)).collect();
        let bv: Vec<Rational> = b.iter().map(|&x| q(x)).collect();
        self.gram.bilinear(&av, &bv)
    }

    /// ⟨β,α⟩ = 2(β,α)/(α,α).
    pub fn pairing(&self, beta: &[i64], alpha: &[i64]) -> Rational {
        q(2) * self.inner(beta, alpha) / self.inner(alpha, alpha)
    }

    /// σ_α(β) = β − ⟨β,α⟩α, assuming the pairing is integral.
    pub fn reflect(&self, beta: &[i64], alpha: &[i64]) -> Vec<i64> {
        let p = self.pairing(beta, alpha);
        assert!(p.is_integer(), "non-integral pairing");
        let p = p.to_integer();
        let p: i64 = (&p).try_into().expect("pairing fits in i64");
        beta.iter().zip(alpha).map(|(b, a)| b - p * a).collect()
    }
}

/// Weyl group elements stored as permutations of [`RootSystem::roots`].
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub roots: Vec<Root>,
    pub elements: Vec<Vec<usize>>,
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Closure of the simple reflections under composition. Intended for small
/// ranks; the order alone is available from [`weyl_order`] for any type.
pub fn weyl_group(c: &CartanMatrix) -> Result<WeylGroup, RootError> {
    let sys = roots_from_cartan(c)?;
    let roots = sys.roots();
    let index: HashMap<&Vec<i64>, usize> = roots.iter().enumerate().map(|(i, r)| (&r.coords, i)).collect();
    let n = c.rank();
    let form = InnerForm::new(c);
    let gens: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            let a = unit(n, i);
            roots.iter().map(|r| index[&form.reflect(&r.coords, &a)]).collect()
        })
        .collect();
    let id: Vec<usize> = (0..roots.len()).collect();
    let mut seen: HashSet<Vec<usize>> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next: Vec<usize> = w.iter().map(|&k| g[k]).collect();
            if seen.insert(next.clone()) {
                elements.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    Ok(WeylGroup { roots, elements })
}

/// |W| = ∏(mᵢ+1), with exponents mᵢ read off as the partition dual to the
/// number of positive roots of each height.
pub fn weyl_order(c: &CartanMatrix) -> Result<u128, RootError> {
    let sys = roots_from_cartan(c)?;
    let max = sys.heights().into_iter().max().unwrap_or(0);
    let count = |h: i64| sys.positive.iter().filter(|r| r.height() == h).count();
    let mut exps = vec![0u128; c.rank()];
    for h in 1..=max {
        for e in exps.iter_mut().take(count(h)) {
            *e += 1;
        }
    }
    Ok(exps.iter().map(|m| m + 1).product())
}

/// Number of times α can be subtracted from β without leaving Φ; the
/// Chevalley constant satisfies |c_{α,β}| = this + 1.
pub fn string_below(sys: &RootSystem, beta: &[i64], alpha: &[i64]) -> usize {
    let all: HashSet<Vec<i64>> = sys.roots().into_iter().map(|r| r.coords).collect();
    let mut k = 0;
    let mut cur: Vec<i64> = beta.to_vec();
    loop {
        cur = cur.iter().zip(alpha).map(|(b, a)| b - a).collect();
        if all.contains(&cur) {
            k += 1;
        } else {
            return k;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g2_cartan_and_roots() {
        let c = cartan_of_type('G', 2).unwrap();
        assert_eq!(c.entries(), &[vec![2, -1], vec![-3, 2]]);
        let sys = roots_from_cartan(&c).unwrap();
        let pos: Vec<Vec<i64>> = sys.positive.iter().map(|r| r.coords.clone()).collect();
        assert_eq!(pos, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 1], vec![3, 1], vec![3, 2]]);
        assert_eq!(sys.heights(), vec![1, 1, 2, 3, 4, 5]);
        assert_eq!(sys.roots().len(), 12);
    }

    #[test]
    fn a1_is_two_roots() {
        let c = cartan_of_type('A', 1).unwrap();
        assert_eq!(c.entries(), &[vec![2]]);
        assert_eq!(roots_from_cartan(&c).unwrap().roots().len(), 2);
        assert_eq!(weyl_group(&c).unwrap().order(), 2);
    }

    #[test]
    fn b3_has_one_double_edge() {
        let c = cartan_of_type('B', 3).unwrap();
        let twos: Vec<_> = (0..3).flat_map(|i| (0..3).map(move |j| (i, j))).filter(|&(i, j)| c.get(i, j) == -2).collect();
        assert_eq!(twos, vec![(1, 2)]);
        assert_eq!(roots_from_cartan(&c).unwrap().roots().len(), 18);
    }

    #[test]
    fn unknown_types_rejected() {
        assert!(cartan_of_type('B', 1).is_err());
        assert!(cartan_of_type('E', 9).is_err());
        assert!(parse_type("Z9").is_err());
        assert!(CartanMatrix::new(vec![vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn affine_matrix_does_not_terminate() {
        let c = CartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert_eq!(roots_from_cartan(&c).unwrap_err(), RootError::NotFiniteType(MAX_HEIGHT));
    }

    #[test]
    fn g2_metric() {
        let f = InnerForm::new(&cartan_of_type('G', 2).unwrap());
        let (a1, a2) = (vec![1, 0], vec![0, 1]);
        assert_eq!(f.inner(&a1, &a1), q(2));
        assert_eq!(f.inner(&a2, &a2), q(3) * f.inner(&a1, &a1));
        let m = f.inner(&a1, &a2);
        assert!(m < q(0));
        assert_eq!(q(4) * &m * &m, q(3) * f.inner(&a1, &a1) * f.inner(&a2, &a2));
    }

    #[test]
    fn weyl_orders() {
        for (t, r, n) in [('A', 2, 6u128), ('G', 2, 12), ('B', 3, 48), ('F', 4, 1152)] {
            let c = cartan_of_type(t, r).unwrap();
            assert_eq!(weyl_order(&c).unwrap(), n, "{t}{r}");
            assert_eq!(weyl_group(&c).unwrap().order() as u128, n, "{t}{r}");
        }
        assert_eq!(weyl_order(&cartan_of_type('E', 8).unwrap()).unwrap(), 696_729_600);
    }

    #[test]
    fn display_roots() {
        assert_eq!(Root { coords: vec![3, 2] }.to_string(), "3a1+2a2");
        assert_eq!(Root { coords: vec![-1, 0] }.to_string(), "-a1");
    }
}
