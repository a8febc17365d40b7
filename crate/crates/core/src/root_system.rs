//! Crystallographic root systems of rank at most three, in simple-root
//! coordinates, together with their spherical Weyl groups.
//!
//! Every vector lives in the basis of simple roots `α_1, …, α_n`. Roots are
//! integer vectors; points of the model space carry arbitrary scalars. The
//! invariant form is normalized so that short roots have squared length 2.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::model_space::Point;
use crate::scalar::{Rational, Scalar};
use crate::Error;

/// The shipped Cartan types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum CartanType {
    A1,
    A2,
    A3,
    B2,
    C2,
    G2,
}

impl CartanType {
    pub const ALL: [CartanType; 6] = [
        CartanType::A1,
        CartanType::A2,
        CartanType::A3,
        CartanType::B2,
        CartanType::C2,
        CartanType::G2,
    ];

    /// Gram matrix `(α_i, α_j)` of the simple roots (Bourbaki numbering).
    fn gram(self) -> Vec<Vec<i64>> {
        match self {
            CartanType::A1 => vec![vec![2]],
            CartanType::A2 => vec![vec![2, -1], vec![-1, 2]],
            CartanType::A3 => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            // α_1 long, α_2 short
            CartanType::B2 => vec![vec![4, -2], vec![-2, 2]],
            // α_1 short, α_2 long
            CartanType::C2 => vec![vec![2, -2], vec![-2, 4]],
            // α_1 short, α_2 long
            CartanType::G2 => vec![vec![2, -3], vec![-3, 6]],
        }
    }

    /// Order of the Weyl group, used as a consistency check.
    pub fn weyl_order(self) -> usize {
        match self {
            CartanType::A1 => 2,
            CartanType::A2 => 6,
            CartanType::A3 => 24,
            CartanType::B2 | CartanType::C2 => 8,
            CartanType::G2 => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CartanType::A1 => "A1",
            CartanType::A2 => "A2",
            CartanType::A3 => "A3",
            CartanType::B2 => "B2",
            CartanType::C2 => "C2",
            CartanType::G2 => "G2",
        };
        f.write_str(s)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        CartanType::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownRootSystem(s.to_string()))
    }
}

/// An integer square matrix acting on simple-root coordinates.
pub type IntMatrix = Vec<Vec<i64>>;

fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub(crate) fn mat_vec(m: &IntMatrix, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Element of the spherical Weyl group: a word in the simple reflections and
/// its matrix in simple-root coordinates.
///
/// Letters are zero-based generator indices; the word `(i_1, …, i_k)` stands
/// for `s_{i_1} ⋯ s_{i_k}`, so `s_{i_k}` acts first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub matrix: IntMatrix,
}

impl WeylElement {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == identity(self.matrix.len())
    }

    /// The word with one-based letters, as printed for users.
    pub fn word_one_based(&self) -> Vec<usize> {
        self.word.iter().map(|i| i + 1).collect()
    }

    pub fn act<S: Scalar>(&self, x: &Point<S>) -> Point<S> {
        x.transform(&self.matrix)
    }

    pub fn act_on_root(&self, root: &[i64]) -> Vec<i64> {
        mat_vec(&self.matrix, root)
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement {
            word,
            matrix: mat_mul(&self.matrix, &other.matrix),
        }
    }

    pub fn inverse(&self) -> WeylElement {
        // Simple reflections are involutions, so reversing the word inverts.
        let word: Vec<usize> = self.word.iter().rev().copied().collect();
        // Elements have finite order, so the inverse is the last power
        // before the identity.
        let id = identity(self.matrix.len());
        let mut prev = id.clone();
        let mut power = self.matrix.clone();
        while power != id {
            prev = power.clone();
            power = mat_mul(&power, &self.matrix);
        }
        WeylElement { word, matrix: prev }
    }
}

/// A crystallographic root system with its Weyl group data precomputed.
///
/// Immutable after construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    rank: usize,
    gram: IntMatrix,
    /// `cartan[i][j] = ⟨α_i, α_j^∨⟩`.
    cartan: IntMatrix,
    positive_roots: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    root_index: HashMap<Vec<i64>, usize>,
    /// Per root `β`: the integer row `j ↦ ⟨α_j, β^∨⟩`.
    coroot_rows: Vec<Vec<i64>>,
    /// Per root `β`: the integer row `j ↦ (α_j, β)`.
    form_rows: Vec<Vec<i64>>,
    simple_reflections: Vec<IntMatrix>,
    elements: Vec<WeylElement>,
    longest: usize,
    fundamental_coweights: Vec<Vec<Rational>>,
    highest_root: usize,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> RootSystem {
        let gram = cartan_type.gram();
        let rank = gram.len();
        let cartan: IntMatrix = (0..rank)
            .map(|i| (0..rank).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();

        // s_i(α_j) = α_j - ⟨α_j, α_i^∨⟩ α_i, stored column-wise.
        let simple_reflections: Vec<IntMatrix> = (0..rank)
            .map(|i| {
                let mut m = identity(rank);
                for j in 0..rank {
                    m[i][j] -= cartan[j][i];
                }
                m
            })
            .collect();

        // Close the simple roots under the simple reflections.
        let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..rank {
            let mut e = vec![0; rank];
            e[i] = 1;
            if seen.insert(e.clone()) {
                queue.push_back(e);
            }
        }
        while let Some(r) = queue.pop_front() {
            for s in &simple_reflections {
                let image = mat_vec(s, &r);
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        let mut positive_roots: Vec<Vec<i64>> =
            seen.iter().filter(|r| r.iter().all(|&c| c >= 0)).cloned().collect();
        // Order by height, then lexicographically, so simple roots come first.
        positive_roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        let mut roots = positive_roots.clone();
        roots.extend(positive_roots.iter().map(|r| r.iter().map(|c| -c).collect()));
        let root_index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();

        let form_rows: Vec<Vec<i64>> = roots
            .iter()
            .map(|beta| (0..rank).map(|j| dot(&gram[j], beta)).collect())
            .collect();
        let coroot_rows = roots
            .iter()
            .zip(&form_rows)
            .map(|(beta, row)| {
                let len = dot(row, beta);
                row.iter().map(|v| 2 * v / len).collect()
            })
            .collect();

        let (elements, longest) = enumerate_weyl_group(&simple_reflections, rank);

        let fundamental_coweights = invert_gram(&gram);

        let highest_root = (0..positive_roots.len())
            .max_by_key(|&i| positive_roots[i].iter().sum::<i64>())
            .expect("root system has roots");

        RootSystem {
            cartan_type,
            rank,
            gram,
            cartan,
            positive_roots,
            roots,
            root_index,
            coroot_rows,
            form_rows,
            simple_reflections,
            elements,
            longest,
            fundamental_coweights,
            highest_root,
        }
    }

    pub fn from_label(label: &str) -> Result<RootSystem, Error> {
        Ok(RootSystem::new(label.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    /// Cartan pairings `⟨α_i, α_j^∨⟩`.
    pub fn cartan(&self) -> &IntMatrix {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Positive roots first (indices `0..|R⁺|`), then their negatives.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn root(&self, index: usize) -> &[i64] {
        &self.roots[index]
    }

    pub fn root_index(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(root).copied()
    }

    pub fn is_positive_index(&self, index: usize) -> bool {
        index < self.num_positive()
    }

    /// Index of `-β`.
    pub fn negate_index(&self, index: usize) -> usize {
        let p = self.num_positive();
        if index < p {
            index + p
        } else {
            index - p
        }
    }

    /// Index of the simple root `α_i`.
    pub fn simple_index(&self, i: usize) -> usize {
        let mut e = vec![0; self.rank];
        e[i] = 1;
        self.root_index[&e]
    }

    pub fn highest_root_index(&self) -> usize {
        self.highest_root
    }

    /// `(β, β)` for a root index.
    pub fn root_length_sq(&self, index: usize) -> i64 {
        dot(&self.form_rows[index], &self.roots[index])
    }

    /// The row `j ↦ ⟨α_j, β^∨⟩` representing the coroot functional.
    pub fn coroot_row(&self, index: usize) -> &[i64] {
        &self.coroot_rows[index]
    }

    /// The row `j ↦ (α_j, β)` representing the functional `(·, β)`.
    pub fn form_row(&self, index: usize) -> &[i64] {
        &self.form_rows[index]
    }

    /// `⟨x, β^∨⟩`.
    pub fn pairing<S: Scalar>(&self, x: &Point<S>, index: usize) -> S {
        x.apply_int_row(&self.coroot_rows[index])
    }

    /// `(x, β)`, the level of the hyperplane through `x` parallel to `H_{β,0}`.
    pub fn level<S: Scalar>(&self, x: &Point<S>, index: usize) -> S {
        x.apply_int_row(&self.form_rows[index])
    }

    /// The invariant form on rational points.
    pub fn form(&self, x: &Point<Rational>, y: &Point<Rational>) -> Rational {
        let mut acc = Rational::from_integer(0);
        for i in 0..self.rank {
            for j in 0..self.rank {
                acc += x[i] * y[j] * Rational::from_integer(self.gram[i][j] as i128);
            }
        }
        acc
    }

    /// The invariant form between a scalar point and a rational vector.
    pub fn form_mixed<S: Scalar>(&self, x: &Point<S>, v: &[Rational]) -> S {
        let row: Vec<Rational> = (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| Rational::from_integer(self.gram[i][j] as i128) * v[j])
                    .sum()
            })
            .collect();
        x.apply_row(&row)
    }

    /// The coroot `β^∨ = 2β/(β,β)` in simple-root coordinates.
    pub fn coroot_vector(&self, index: usize) -> Point<Rational> {
        let len = Rational::from_integer(self.root_length_sq(index) as i128);
        let two = Rational::from_integer(2);
        Point::new(
            self.roots[index]
                .iter()
                .map(|&c| Rational::from_integer(c as i128) * two / len)
                .collect(),
        )
    }

    /// The root as a point over any scalar group.
    pub fn root_point<S: Scalar>(&self, index: usize) -> Point<S> {
        Point::from_ints(&self.roots[index])
    }

    pub fn simple_reflection(&self, i: usize) -> &IntMatrix {
        &self.simple_reflections[i]
    }

    /// The linear reflection `s_β` as a matrix.
    pub fn reflection_matrix(&self, index: usize) -> IntMatrix {
        let beta = &self.roots[index];
        let row = &self.coroot_rows[index];
        (0..self.rank)
            .map(|i| {
                (0..self.rank)
                    .map(|j| i64::from(i == j) - beta[i] * row[j])
                    .collect()
            })
            .collect()
    }

    /// `s_β(x) = x - ⟨x, β^∨⟩ β`.
    pub fn reflect<S: Scalar>(&self, x: &Point<S>, index: usize) -> Point<S> {
        let c = self.pairing(x, index);
        let mut out = x.clone();
        for (coord, &b) in out.coords_mut().iter_mut().zip(&self.roots[index]) {
            *coord = coord.clone() - c.scale_int(b);
        }
        out
    }

    /// `s_α(β)` for roots `α, β`.
    pub fn reflect_root(&self, alpha: &[i64], beta: &[i64]) -> Result<Vec<i64>, Error> {
        let a = self
            .root_index(alpha)
            .ok_or_else(|| Error::NotARoot(alpha.to_vec()))?;
        if self.root_index(beta).is_none() {
            return Err(Error::NotARoot(beta.to_vec()));
        }
        let pairing = dot(&self.coroot_rows[a], beta);
        Ok(beta.iter().zip(alpha).map(|(b, a)| b - pairing * a).collect())
    }

    /// All Weyl group elements with their lexicographically smallest reduced
    /// words, in breadth-first order.
    pub fn weyl_group(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn weyl_order(&self) -> usize {
        self.elements.len()
    }

    /// The longest element `w₀`, carrying its lexicographically smallest
    /// reduced word.
    pub fn longest_word(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement {
            word: Vec::new(),
            matrix: identity(self.rank),
        }
    }

    /// Builds an element from a word of zero-based letters.
    pub fn element_from_word(&self, word: &[usize]) -> Result<WeylElement, Error> {
        let mut matrix = identity(self.rank);
        for &i in word {
            if i >= self.rank {
                return Err(Error::BadWord(format!(
                    "letter {} out of range for rank {}",
                    i + 1,
                    self.rank
                )));
            }
            matrix = mat_mul(&matrix, &self.simple_reflections[i]);
        }
        Ok(WeylElement {
            word: word.to_vec(),
            matrix,
        })
    }

    /// Length of an element, looked up by its matrix.
    pub fn length_of(&self, matrix: &IntMatrix) -> usize {
        self.elements
            .iter()
            .find(|e| &e.matrix == matrix)
            .map(|e| e.word.len())
            .expect("matrix is a Weyl group element")
    }

    /// Whether the word is a reduced expression.
    pub fn is_reduced(&self, word: &[usize]) -> Result<bool, Error> {
        let e = self.element_from_word(word)?;
        Ok(self.length_of(&e.matrix) == word.len())
    }

    /// Every reduced expression of the given element, sorted
    /// lexicographically.
    pub fn reduced_words(&self, element: &WeylElement) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.collect_reduced_words(&element.matrix, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    fn collect_reduced_words(
        &self,
        matrix: &IntMatrix,
        suffix: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let len = self.length_of(matrix);
        if len == 0 {
            out.push(suffix.iter().rev().copied().collect());
            return;
        }
        for i in 0..self.rank {
            let shorter = mat_mul(matrix, &self.simple_reflections[i]);
            if self.length_of(&shorter) < len {
                suffix.push(i);
                self.collect_reduced_words(&shorter, suffix, out);
                suffix.pop();
            }
        }
    }

    /// Parses a one-based word such as `1,2,1` and checks it is a reduced
    /// expression of `w₀`.
    pub fn parse_longest_word(&self, text: &str) -> Result<Vec<usize>, Error> {
        let word = crate::literal::parse_word(text)?;
        let e = self.element_from_word(&word)?;
        if e.matrix != self.longest_word().matrix || word.len() != self.longest_word().len() {
            return Err(Error::BadWord(format!(
                "{text} is not a reduced expression of the longest element"
            )));
        }
        Ok(word)
    }

    /// `W̄.x`, the closure of `{x}` under the simple reflections.
    pub fn weyl_orbit<S: Scalar>(&self, x: &Point<S>) -> BTreeSet<Point<S>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(x.clone());
        queue.push_back(x.clone());
        while let Some(p) = queue.pop_front() {
            for i in 0..self.rank {
                let image = self.reflect(&p, self.simple_index(i));
                if seen.insert(image.clone()) {
                    queue.push_back(image);
                }
            }
        }
        seen
    }

    /// Fundamental co-weight `ω_i` in simple-root coordinates, normalized by
    /// `(α_j, ω_i) = δ_ij`. With this normalization `(x, ω_i)` is simply the
    /// `i`-th simple-root coordinate of `x`, and each `ω_i` lies in the closed
    /// fundamental chamber.
    pub fn fundamental_coweight(&self, i: usize) -> &[Rational] {
        &self.fundamental_coweights[i]
    }

    /// Coefficients of `β^∨` in the basis of simple coroots.
    pub fn coroot_coefficients(&self, index: usize) -> Vec<Rational> {
        let v = self.coroot_vector(index);
        (0..self.rank)
            .map(|j| {
                let simple = self.coroot_vector(self.simple_index(j));
                v[j] / simple[j]
            })
            .collect()
    }

    pub fn is_dominant<S: Scalar>(&self, x: &Point<S>) -> bool {
        (0..self.rank).all(|i| !self.pairing(x, self.simple_index(i)).is_negative())
    }

    /// Checks the structural invariants; used by tests and `verify-all`.
    pub fn check_invariants(&self) -> Result<(), String> {
        for i in 0..self.rank {
            if self.cartan[i][i] != 2 {
                return Err(format!("diagonal pairing {i} is not 2"));
            }
            for j in 0..self.rank {
                if i != j && self.cartan[i][j] > 0 {
                    return Err(format!("positive off-diagonal pairing ({i},{j})"));
                }
            }
        }
        for r in &self.roots {
            let idx = self.root_index[r];
            if self.pairing::<Rational>(&Point::from_ints(r), idx) != Rational::from_integer(2) {
                return Err(format!("⟨β, β^∨⟩ ≠ 2 for {r:?}"));
            }
            for s in &self.simple_reflections {
                if !self.root_index.contains_key(&mat_vec(s, r)) {
                    return Err(format!("simple reflection leaves R at {r:?}"));
                }
            }
        }
        if 2 * self.positive_roots.len() != self.roots.len() {
            return Err("|R⁺| ≠ |R|/2".into());
        }
        if self.elements.len() != self.cartan_type.weyl_order() {
            return Err(format!(
                "|W| = {} but expected {}",
                self.elements.len(),
                self.cartan_type.weyl_order()
            ));
        }
        let w0 = self.longest_word();
        if w0.len() != self.positive_roots.len() {
            return Err("length(w₀) ≠ |R⁺|".into());
        }
        for r in &self.positive_roots {
            let image = w0.act_on_root(r);
            if image.iter().any(|&c| c > 0) {
                return Err(format!("w₀ keeps {r:?} positive"));
            }
        }
        Ok(())
    }
}

/// Breadth-first enumeration of the group generated by `gens`. Words are
/// extended on the right in increasing letter order, and each level is
/// processed in the order it was discovered, so the first word reaching an
/// element is its lexicographically smallest reduced expression.
fn enumerate_weyl_group(gens: &[IntMatrix], rank: usize) -> (Vec<WeylElement>, usize) {
    let mut elements = vec![WeylElement {
        word: Vec::new(),
        matrix: identity(rank),
    }];
    let mut index: HashMap<IntMatrix, usize> = HashMap::new();
    index.insert(identity(rank), 0);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        for (g, m) in gens.iter().enumerate() {
            let product = mat_mul(&current.matrix, m);
            if !index.contains_key(&product) {
                index.insert(product.clone(), elements.len());
                let mut word = current.word.clone();
                word.push(g);
                elements.push(WeylElement {
                    word,
                    matrix: product,
                });
            }
        }
        head += 1;
    }
    let longest = (0..elements.len())
        .max_by_key(|&i| (elements[i].word.len(), std::cmp::Reverse(i)))
        .unwrap_or(0);
    (elements, longest)
}

/// Columns of the inverse Gram matrix, computed exactly by Gauss–Jordan.
fn invert_gram(gram: &IntMatrix) -> Vec<Vec<Rational>> {
    let n = gram.len();
    let mut a: Vec<Vec<Rational>> = gram
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rational> = row
                .iter()
                .map(|&v| Rational::from_integer(v as i128))
                .collect();
            r.extend((0..n).map(|j| Rational::from_integer(i128::from(i == j))));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| a[r][col] != Rational::from_integer(0))
            .expect("Gram matrix is positive definite");
        a.swap(col, pivot);
        let p = a[col][col];
        for v in a[col].iter_mut() {
            *v /= p;
        }
        for r in 0..n {
            if r != col {
                let f = a[r][col];
                if f != Rational::from_integer(0) {
                    let pivot = a[col].clone();
                    for (v, p) in a[r].iter_mut().zip(&pivot) {
                        *v -= f * *p;
                    }
                }
            }
        }
    }
    // ω_i is the i-th column of G⁻¹; G is symmetric so rows work too.
    (0..n).map(|i| a[i][n..].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qi};

    fn rs(t: CartanType) -> RootSystem {
        RootSystem::new(t)
    }

    #[test]
    fn invariants_hold_for_all_types() {
        for t in CartanType::ALL {
            rs(t).check_invariants().unwrap_or_else(|e| panic!("{t}: {e}"));
        }
    }

    #[test]
    fn a1_data() {
        let a1 = rs(CartanType::A1);
        assert_eq!(a1.positive_roots(), &[vec![1]]);
        assert_eq!(a1.weyl_order(), 2);
        assert_eq!(a1.longest_word().word, vec![0]);
    }

    #[test]
    fn a2_data() {
        let a2 = rs(CartanType::A2);
        assert_eq!(a2.positive_roots(), &[vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(a2.weyl_order(), 6);
        assert_eq!(a2.longest_word().word, vec![0, 1, 0]);
    }

    #[test]
    fn g2_and_b2_longest_words() {
        let g2 = rs(CartanType::G2);
        assert_eq!(g2.num_positive(), 6);
        assert_eq!(g2.longest_word().len(), 6);
        assert_eq!(g2.longest_word().word, vec![0, 1, 0, 1, 0, 1]);
        let b2 = rs(CartanType::B2);
        assert_eq!(b2.longest_word().len(), 4);
        assert_eq!(b2.longest_word().word, vec![0, 1, 0, 1]);
    }

    #[test]
    fn unknown_label_is_rejected() {
        assert!(matches!(
            RootSystem::from_label("E8"),
            Err(Error::UnknownRootSystem(_))
        ));
        assert!(RootSystem::from_label("g2").is_ok());
    }

    #[test]
    fn reflect_root_examples() {
        let a2 = rs(CartanType::A2);
        assert_eq!(a2.reflect_root(&[1, 0], &[0, 1]).unwrap(), vec![1, 1]);
        assert_eq!(a2.reflect_root(&[1, 0], &[1, 1]).unwrap(), vec![0, 1]);
        for r in a2.roots() {
            let neg: Vec<i64> = r.iter().map(|c| -c).collect();
            assert_eq!(a2.reflect_root(r, r).unwrap(), neg);
        }
        assert!(matches!(
            a2.reflect_root(&[2, 0], &[1, 0]),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn reflections_square_to_identity() {
        for t in CartanType::ALL {
            let r = rs(t);
            for i in 0..r.roots().len() {
                let m = r.reflection_matrix(i);
                assert!(mat_mul(&m, &m) == identity(r.rank()));
            }
            let w0 = &r.longest_word().matrix;
            assert_eq!(mat_mul(w0, w0), identity(r.rank()));
        }
    }

    #[test]
    fn longest_word_reduced_expressions() {
        let a2 = rs(CartanType::A2);
        assert_eq!(
            a2.reduced_words(a2.longest_word()),
            vec![vec![0, 1, 0], vec![1, 0, 1]]
        );
        let a3 = rs(CartanType::A3);
        assert_eq!(a3.reduced_words(a3.longest_word()).len(), 16);
        let g2 = rs(CartanType::G2);
        assert_eq!(g2.reduced_words(g2.longest_word()).len(), 2);
    }

    #[test]
    fn orbit_examples() {
        let a2 = rs(CartanType::A2);
        let zero = Point::<Rational>::zero(2);
        assert_eq!(a2.weyl_orbit(&zero).len(), 1);
        let theta = Point::new(vec![qi(1), qi(1)]);
        let orbit = a2.weyl_orbit(&theta);
        let expected: BTreeSet<_> = a2
            .roots()
            .iter()
            .map(|r| Point::<Rational>::from_ints(r))
            .collect();
        assert_eq!(orbit, expected);
        let a1 = rs(CartanType::A1);
        assert_eq!(a1.weyl_orbit(&Point::new(vec![qi(1)])).len(), 2);
    }

    #[test]
    fn coweights_are_dual_to_simple_roots() {
        for t in CartanType::ALL {
            let r = rs(t);
            for i in 0..r.rank() {
                let w = Point::new(r.fundamental_coweight(i).to_vec());
                for j in 0..r.rank() {
                    let alpha = Point::from_ints(r.root(r.simple_index(j)));
                    assert_eq!(r.form(&alpha, &w), qi(i128::from(i == j)));
                }
            }
        }
    }

    #[test]
    fn coroot_coefficients_b2() {
        let b2 = rs(CartanType::B2);
        // α_1 + α_2 is short; its coroot is 2α_1^∨ + α_2^∨.
        let idx = b2.root_index(&[1, 1]).unwrap();
        assert_eq!(b2.coroot_coefficients(idx), vec![qi(2), qi(1)]);
        assert_eq!(b2.coroot_vector(b2.simple_index(0)), Point::new(vec![q(1, 2), qi(0)]));
    }

    #[test]
    fn inverse_undoes_element() {
        let g2 = rs(CartanType::G2);
        let x = Point::new(vec![q(3, 2), q(-1, 5)]);
        for w in g2.weyl_group() {
            assert_eq!(w.inverse().act(&w.act(&x)), x);
        }
    }
}
