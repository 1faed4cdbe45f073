//! Finite-dimensional algebras over the rationals, their modules, tensor
//! products over an algebra, hom-spaces, firmness and the B-ring `Σ ⊗_A Σ*`.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::linalg::{
    cokernel, is_isomorphism, kernel_basis, kron_vectors, kronecker, rational, unit_vector, zero_vector,
    ExactMatrix, LinearMap, QuotientPresentation, Rational, SubspacePresentation, Vector,
};

/// Structure constants `e_i · e_j = Σ_k c[i][j][k] e_k`, optionally unital.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    dim: usize,
    structure: Vec<Rational>,
    unit: Option<Vector>,
}

impl Algebra {
    pub fn new(dim: usize, structure: Vec<Rational>, unit: Option<Vector>) -> Result<Self> {
        if structure.len() != dim * dim * dim {
            return Err(Error::Dimension(format!(
                "structure tensor of length {} for an algebra of dimension {dim}",
                structure.len()
            )));
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::Dimension(format!("unit of length {} in dimension {dim}", u.len())));
            }
        }
        Ok(Algebra { dim, structure, unit })
    }

    pub fn from_products(dim: usize, unit: Option<Vector>, mut product: impl FnMut(usize, usize) -> Vector) -> Self {
        let mut structure = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let p = product(i, j);
                assert_eq!(p.len(), dim, "product e{i}·e{j} has wrong length");
                structure.extend(p);
            }
        }
        Algebra { dim, structure, unit }
    }

    /// The ground field `Q`.
    pub fn scalars() -> Self {
        Algebra::from_products(1, Some(vec![Rational::one()]), |_, _| vec![Rational::one()])
    }

    /// `Q(√d) = Q[s]/(s² − d)` on the basis `{1, s}`.
    pub fn quadratic_field(d: i64) -> Self {
        Algebra::from_products(2, Some(unit_vector(2, 0)), |i, j| match (i, j) {
            (0, k) | (k, 0) => unit_vector(2, k),
            _ => vec![rational(d), Rational::zero()],
        })
    }

    /// Group algebra `Q[Z/n]` on the basis of group elements.
    pub fn cyclic_group_algebra(n: usize) -> Self {
        Algebra::from_products(n, Some(unit_vector(n, 0)), |i, j| unit_vector(n, (i + j) % n))
    }

    /// Full matrix algebra `M_n(Q)` on matrix units `E_ij`, index `i * n + j`.
    pub fn matrix_algebra(n: usize) -> Self {
        let mut unit = zero_vector(n * n);
        for i in 0..n {
            unit[i * n + i] = Rational::one();
        }
        Algebra::from_products(n * n, Some(unit), |a, b| {
            let (i, j, k, l) = (a / n, a % n, b / n, b % n);
            if j == k {
                unit_vector(n * n, i * n + l)
            } else {
                zero_vector(n * n)
            }
        })
    }

    /// `Q[x]/(x^n)` on the monomial basis.
    pub fn truncated_polynomial(n: usize) -> Self {
        Algebra::from_products(n, Some(unit_vector(n, 0)), |i, j| {
            if i + j < n {
                unit_vector(n, i + j)
            } else {
                zero_vector(n)
            }
        })
    }

    /// Non-unital algebra with identically zero multiplication.
    pub fn zero_product(n: usize) -> Self {
        Algebra::from_products(n, None, |_, _| zero_vector(n))
    }

    /// First-row matrices `span{E_1j} ⊂ M_n(Q)`: `f_i f_j = δ_{i1} f_j`.
    /// Non-unital for `n ≥ 2` (left unit only) but firm.
    pub fn row_matrices(n: usize) -> Self {
        Algebra::from_products(n, None, |i, j| if i == 0 { unit_vector(n, j) } else { zero_vector(n) })
    }

    pub fn direct_product(a: &Algebra, b: &Algebra) -> Self {
        let n = a.dim + b.dim;
        let unit = match (&a.unit, &b.unit) {
            (Some(u), Some(v)) => Some(u.iter().chain(v).cloned().collect()),
            _ => None,
        };
        Algebra::from_products(n, unit, |i, j| {
            let mut out = zero_vector(n);
            if i < a.dim && j < a.dim {
                out[..a.dim].clone_from_slice(&a.basis_product(i, j));
            } else if i >= a.dim && j >= a.dim {
                out[a.dim..].clone_from_slice(&b.basis_product(i - a.dim, j - a.dim));
            }
            out
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn unit(&self) -> Option<&Vector> {
        self.unit.as_ref()
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn structure(&self) -> &[Rational] {
        &self.structure
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        &self.structure[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        let start = (i * self.dim + j) * self.dim;
        self.structure[start..start + self.dim].to_vec()
    }

    pub fn multiply(&self, a: &[Rational], b: &[Rational]) -> Vector {
        let mut out = zero_vector(self.dim);
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.structure_constant(i, j, k);
                    if !c.is_zero() {
                        *o += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `x ↦ a·x`.
    pub fn left_multiplication(&self, a: &[Rational]) -> ExactMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.multiply(a, &unit_vector(self.dim, j))).collect();
        ExactMatrix::from_columns(self.dim, &cols)
    }

    /// Matrix of `x ↦ x·a`.
    pub fn right_multiplication(&self, a: &[Rational]) -> ExactMatrix {
        let cols: Vec<Vector> = (0..self.dim).map(|j| self.multiply(&unit_vector(self.dim, j), a)).collect();
        ExactMatrix::from_columns(self.dim, &cols)
    }

    /// The multiplication `A ⊗_Q A → A`; column `i * dim + j` is `e_i e_j`.
    pub fn multiplication_matrix(&self) -> ExactMatrix {
        let cols: Vec<Vector> =
            (0..self.dim * self.dim).map(|c| self.basis_product(c / self.dim, c % self.dim)).collect();
        ExactMatrix::from_columns(self.dim, &cols)
    }
}

fn label(i: usize) -> String {
    format!("e{}", i + 1)
}

/// Associativity and (when declared) unit laws, with the first failing basis triple.
pub fn check_algebra(a: &Algebra) -> AxiomReport {
    let mut report = AxiomReport::new("algebra");
    let n = a.dim();
    let mut witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            let ij = a.basis_product(i, j);
            for k in 0..n {
                let jk = a.basis_product(j, k);
                let lhs = a.multiply(&ij, &unit_vector(n, k));
                let rhs = a.multiply(&unit_vector(n, i), &jk);
                if lhs != rhs {
                    witness = Some(format!(
                        "({a}·{b})·{c} ≠ {a}·({b}·{c}) at triple ({i1},{j1},{k1})",
                        a = label(i),
                        b = label(j),
                        c = label(k),
                        i1 = i + 1,
                        j1 = j + 1,
                        k1 = k + 1
                    ));
                    break 'outer;
                }
            }
        }
    }
    report.record("associativity", witness);
    if let Some(u) = a.unit() {
        let witness = (0..n).find_map(|i| {
            let e = unit_vector(n, i);
            (a.multiply(u, &e) != e || a.multiply(&e, u) != e).then(|| format!("1·{0} or {0}·1 differs from {0}", label(i)))
        });
        report.record("unit", witness);
    }
    report
}

/// A subalgebra `B ⊆ A` with its induced structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subalgebra {
    pub ambient: Arc<Algebra>,
    /// `dim A × dim B`; columns are the basis of `B` inside `A`.
    pub inclusion: ExactMatrix,
    pub algebra: Arc<Algebra>,
}

impl Subalgebra {
    /// Subalgebra spanned by the given columns; fails if the span is not closed
    /// under multiplication.
    pub fn new(ambient: Arc<Algebra>, generators: &ExactMatrix) -> Result<Self> {
        if generators.rows() != ambient.dim() {
            return Err(Error::Dimension("subalgebra generators do not live in the ambient algebra".into()));
        }
        let span = SubspacePresentation::span(generators);
        let basis = span.basis.columns();
        let k = basis.len();
        let mut structure = Vec::with_capacity(k * k * k);
        for u in &basis {
            for v in &basis {
                let coords = span.coordinates(&ambient.multiply(u, v)).ok_or_else(|| {
                    Error::Axiom("span of the generators is not closed under multiplication".into())
                })?;
                structure.extend(coords);
            }
        }
        let unit = ambient.unit().and_then(|u| span.coordinates(u));
        let algebra = Algebra::new(k, structure, unit)?;
        Ok(Subalgebra { ambient, inclusion: span.basis, algebra: Arc::new(algebra) })
    }

    /// `Q·1 ⊆ A` for unital `A`.
    pub fn scalars(ambient: Arc<Algebra>) -> Result<Self> {
        let u = ambient.unit().cloned().ok_or_else(|| Error::Unsupported("scalar subalgebra of a non-unital algebra".into()))?;
        Subalgebra::new(ambient, &ExactMatrix::column_vector(&u))
    }

    pub fn whole(ambient: Arc<Algebra>) -> Self {
        let n = ambient.dim();
        Subalgebra { algebra: ambient.clone(), ambient, inclusion: ExactMatrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
}

/// Action of an algebra on a module: `matrices[i]` is the action of `e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Action {
    pub algebra: Arc<Algebra>,
    pub matrices: Vec<ExactMatrix>,
}

impl Action {
    pub fn new(algebra: Arc<Algebra>, matrices: Vec<ExactMatrix>) -> Result<Self> {
        if matrices.len() != algebra.dim() {
            return Err(Error::Dimension(format!(
                "{} action matrices for an algebra of dimension {}",
                matrices.len(),
                algebra.dim()
            )));
        }
        if let Some(first) = matrices.first() {
            if matrices.iter().any(|m| m.rows() != first.rows() || m.cols() != first.rows()) {
                return Err(Error::Dimension("action matrices must be square and equally sized".into()));
            }
        }
        Ok(Action { algebra, matrices })
    }

    /// Action of an arbitrary element `a = Σ a_i e_i`.
    pub fn by(&self, a: &[Rational], module_dim: usize) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(module_dim, module_dim);
        for (coef, m) in a.iter().zip(&self.matrices) {
            if !coef.is_zero() {
                out = &out + &m.scale(coef);
            }
        }
        out
    }

    /// Restriction along a subalgebra inclusion.
    pub fn restrict(&self, sub: &Subalgebra, module_dim: usize) -> Result<Action> {
        if *sub.ambient != *self.algebra {
            return Err(Error::AlgebraMismatch("restriction along a subalgebra of a different algebra".into()));
        }
        let matrices = (0..sub.dim()).map(|b| self.by(&sub.inclusion.column(b), module_dim)).collect();
        Action::new(sub.algebra.clone(), matrices)
    }
}

/// Presentation of a module as a quotient of a tensor product over `Q` of
/// its atomic factors. Used to compare differently-bracketed tensor products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatPresentation {
    pub dim: usize,
    pub projection: ExactMatrix,
    pub section: ExactMatrix,
}

/// A finite-dimensional module with an optional left and an optional right
/// action. One-sided modules leave the other side empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bimodule {
    dim: usize,
    left: Option<Action>,
    right: Option<Action>,
    flat: Option<FlatPresentation>,
}

impl Bimodule {
    pub fn new(dim: usize, left: Option<Action>, right: Option<Action>) -> Result<Self> {
        for action in left.iter().chain(right.iter()) {
            if action.matrices.iter().any(|m| m.rows() != dim) {
                return Err(Error::Dimension(format!("action matrices do not act on a space of dimension {dim}")));
            }
        }
        Ok(Bimodule { dim, left, right, flat: None })
    }

    pub fn right_module(algebra: Arc<Algebra>, dim: usize, matrices: Vec<ExactMatrix>) -> Result<Self> {
        Bimodule::new(dim, None, Some(Action::new(algebra, matrices)?))
    }

    pub fn left_module(algebra: Arc<Algebra>, dim: usize, matrices: Vec<ExactMatrix>) -> Result<Self> {
        Bimodule::new(dim, Some(Action::new(algebra, matrices)?), None)
    }

    /// `A` acting on itself from both sides.
    pub fn regular(algebra: Arc<Algebra>) -> Self {
        let n = algebra.dim();
        let left = (0..n).map(|i| algebra.left_multiplication(&unit_vector(n, i))).collect();
        let right = (0..n).map(|i| algebra.right_multiplication(&unit_vector(n, i))).collect();
        Bimodule {
            dim: n,
            left: Some(Action { algebra: algebra.clone(), matrices: left }),
            right: Some(Action { algebra, matrices: right }),
            flat: None,
        }
    }

    pub fn regular_right(algebra: Arc<Algebra>) -> Self {
        Bimodule::regular(algebra).without_left()
    }

    pub fn regular_left(algebra: Arc<Algebra>) -> Self {
        Bimodule::regular(algebra).without_right()
    }

    /// Free right module `A^rank`, coordinates block by block.
    pub fn free_right(algebra: Arc<Algebra>, rank: usize) -> Self {
        let n = algebra.dim();
        let id = ExactMatrix::identity(rank);
        let matrices = (0..n)
            .map(|i| kronecker(&id, &algebra.right_multiplication(&unit_vector(n, i))))
            .collect();
        Bimodule { dim: n * rank, left: None, right: Some(Action { algebra, matrices }), flat: None }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self) -> Option<&Action> {
        self.left.as_ref()
    }

    pub fn right(&self) -> Option<&Action> {
        self.right.as_ref()
    }

    pub fn left_action(&self) -> Result<&Action> {
        self.left.as_ref().ok_or_else(|| Error::Unsupported("module carries no left action".into()))
    }

    pub fn right_action(&self) -> Result<&Action> {
        self.right.as_ref().ok_or_else(|| Error::Unsupported("module carries no right action".into()))
    }

    /// Matrix of `m ↦ a·m`.
    pub fn act_left(&self, a: &[Rational]) -> Result<ExactMatrix> {
        Ok(self.left_action()?.by(a, self.dim))
    }

    /// Matrix of `m ↦ m·a`.
    pub fn act_right(&self, a: &[Rational]) -> Result<ExactMatrix> {
        Ok(self.right_action()?.by(a, self.dim))
    }

    pub fn with_left(mut self, action: Action) -> Result<Self> {
        if action.matrices.iter().any(|m| m.rows() != self.dim) {
            return Err(Error::Dimension("left action has the wrong size".into()));
        }
        self.left = Some(action);
        Ok(self)
    }

    pub fn with_right(mut self, action: Action) -> Result<Self> {
        if action.matrices.iter().any(|m| m.rows() != self.dim) {
            return Err(Error::Dimension("right action has the wrong size".into()));
        }
        self.right = Some(action);
        Ok(self)
    }

    pub fn without_left(mut self) -> Self {
        self.left = None;
        self
    }

    pub fn without_right(mut self) -> Self {
        self.right = None;
        self
    }

    /// Forgets the tensor-product origin, making this an atomic factor.
    pub fn atomic(mut self) -> Self {
        self.flat = None;
        self
    }

    pub fn flat(&self) -> Option<&FlatPresentation> {
        self.flat.as_ref()
    }

    pub fn flat_dim(&self) -> usize {
        self.flat.as_ref().map_or(self.dim, |f| f.dim)
    }

    pub fn flat_projection(&self) -> ExactMatrix {
        self.flat.as_ref().map_or_else(|| ExactMatrix::identity(self.dim), |f| f.projection.clone())
    }

    pub fn flat_section(&self) -> ExactMatrix {
        self.flat.as_ref().map_or_else(|| ExactMatrix::identity(self.dim), |f| f.section.clone())
    }
}

fn first_bad<F: Fn(usize) -> bool>(n: usize, bad: F) -> Option<usize> {
    (0..n).find(|&i| bad(i))
}

/// Module axioms for whichever sides are present, plus commutation of the two actions.
pub fn check_module(m: &Bimodule) -> AxiomReport {
    let mut report = AxiomReport::new("module");
    if let Some(r) = m.right() {
        let alg = &r.algebra;
        let n = alg.dim();
        let w = (0..n * n).find_map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let lhs = &r.matrices[j] * &r.matrices[i];
            let rhs = r.by(&alg.basis_product(i, j), m.dim());
            (lhs != rhs).then(|| format!("(m·{})·{} ≠ m·({}{})", label(i), label(j), label(i), label(j)))
        });
        report.record("right associativity", w);
        if let Some(u) = alg.unit() {
            let w = (!r.by(u, m.dim()).is_identity()).then(|| "m·1 ≠ m".to_string());
            report.record("right unit", w);
        }
    }
    if let Some(l) = m.left() {
        let alg = &l.algebra;
        let n = alg.dim();
        let w = (0..n * n).find_map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let lhs = &l.matrices[i] * &l.matrices[j];
            let rhs = l.by(&alg.basis_product(i, j), m.dim());
            (lhs != rhs).then(|| format!("{}·({}·m) ≠ ({}{})·m", label(i), label(j), label(i), label(j)))
        });
        report.record("left associativity", w);
        if let Some(u) = alg.unit() {
            let w = (!l.by(u, m.dim()).is_identity()).then(|| "1·m ≠ m".to_string());
            report.record("left unit", w);
        }
    }
    if let (Some(l), Some(r)) = (m.left(), m.right()) {
        let nl = l.matrices.len();
        let nr = r.matrices.len();
        let w = first_bad(nl * nr, |k| {
            let (a, b) = (k / nr, k % nr);
            &l.matrices[a] * &r.matrices[b] != &r.matrices[b] * &l.matrices[a]
        })
        .map(|k| format!("({}·m)·{} ≠ {}·(m·{})", label(k / nr), label(k % nr), label(k / nr), label(k % nr)));
        report.record("actions commute", w);
    }
    report
}

/// `M ⊗_A N` as an explicit quotient of `M ⊗_Q N`, with the outer actions of
/// `M` (left) and `N` (right) transported through the projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorProduct {
    pub left_dim: usize,
    pub right_dim: usize,
    /// Balancing relations `m·a ⊗ n − m ⊗ a·n`, as columns in `M ⊗_Q N`.
    pub relations: ExactMatrix,
    pub quotient: QuotientPresentation,
    pub module: Bimodule,
}

impl TensorProduct {
    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Class of `u ⊗ v`.
    pub fn class_of(&self, u: &[Rational], v: &[Rational]) -> Vector {
        self.quotient.project(&kron_vectors(u, v))
    }

    pub fn projection(&self) -> &ExactMatrix {
        &self.quotient.projection
    }

    pub fn section(&self) -> &ExactMatrix {
        &self.quotient.section
    }
}

/// Tensor product over the algebra acting on the right of `m` and the left of `n`.
pub fn tensor_over(m: &Bimodule, n: &Bimodule) -> Result<TensorProduct> {
    let r = m.right_action()?;
    let l = n.left_action()?;
    if r.algebra != l.algebra {
        return Err(Error::AlgebraMismatch("right algebra of the left factor differs from left algebra of the right factor".into()));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let idm = ExactMatrix::identity(dm);
    let idn = ExactMatrix::identity(dn);
    let blocks: Vec<ExactMatrix> = r
        .matrices
        .iter()
        .zip(&l.matrices)
        .map(|(ra, la)| &kronecker(ra, &idn) - &kronecker(&idm, la))
        .collect();
    let refs: Vec<&ExactMatrix> = blocks.iter().collect();
    let relations = ExactMatrix::hstack(&refs, dm * dn);
    let quotient = cokernel(&relations, dm * dn)?;
    let p = &quotient.projection;
    let s = &quotient.section;

    let induce = |lift: &dyn Fn(&ExactMatrix) -> ExactMatrix, action: &Action, side: &str| -> Result<Action> {
        let mut mats = Vec::with_capacity(action.matrices.len());
        for (i, a) in action.matrices.iter().enumerate() {
            let big = lift(a);
            if !(&(p * &big) * &relations).is_zero() {
                return Err(Error::IllDefined(format!("induced {side} action of {} on the tensor product", label(i))));
            }
            mats.push(&(p * &big) * s);
        }
        Action::new(action.algebra.clone(), mats)
    };
    let left = match m.left() {
        Some(a) => Some(induce(&|x| kronecker(x, &idn), a, "left")?),
        None => None,
    };
    let right = match n.right() {
        Some(a) => Some(induce(&|x| kronecker(&idm, x), a, "right")?),
        None => None,
    };
    let flat = FlatPresentation {
        dim: m.flat_dim() * n.flat_dim(),
        projection: p * &kronecker(&m.flat_projection(), &n.flat_projection()),
        section: &kronecker(&m.flat_section(), &n.flat_section()) * s,
    };
    let module = Bimodule { dim: quotient.dim(), left, right, flat: Some(flat) };
    Ok(TensorProduct { left_dim: dm, right_dim: dn, relations, quotient, module })
}

/// The map `f ⊗ g : src → dst` induced on tensor products over an algebra.
/// Fails if `f ⊗ g` does not respect the balancing relations of `src`.
pub fn tensor_morphism(src: &TensorProduct, dst: &TensorProduct, f: &LinearMap, g: &LinearMap) -> Result<LinearMap> {
    if f.cols() != src.left_dim || g.cols() != src.right_dim || f.rows() != dst.left_dim || g.rows() != dst.right_dim {
        return Err(Error::Dimension(format!(
            "tensor morphism {}x{} ⊗ {}x{} between ({}⊗{}) and ({}⊗{})",
            f.rows(),
            f.cols(),
            g.rows(),
            g.cols(),
            src.left_dim,
            src.right_dim,
            dst.left_dim,
            dst.right_dim
        )));
    }
    let big = kronecker(f, g);
    let pbig = dst.projection() * &big;
    if !(&pbig * &src.relations).is_zero() {
        return Err(Error::IllDefined("tensor product of maps does not respect balancing relations".into()));
    }
    Ok(&pbig * src.section())
}

/// Canonical isomorphism between two quotients of the same flat tensor space,
/// e.g. `(L ⊗ M) ⊗ N → L ⊗ (M ⊗ N)`.
pub fn transport(from: &Bimodule, to: &Bimodule) -> Result<LinearMap> {
    if from.flat_dim() != to.flat_dim() {
        return Err(Error::Dimension(format!(
            "cannot transport between flat spaces of dimension {} and {}",
            from.flat_dim(),
            to.flat_dim()
        )));
    }
    Ok(&to.flat_projection() * &from.flat_section())
}

/// `ϖ_M⁺ : M ⊗_A A → M`, `m ⊗ a ↦ m·a`.
pub fn multiplication_map(m: &Bimodule) -> Result<(TensorProduct, LinearMap)> {
    let alg = m.right_action()?.algebra.clone();
    let reg = Bimodule::regular(alg.clone()).without_right();
    let t = tensor_over(m, &reg)?;
    let na = alg.dim();
    let mut flat = ExactMatrix::zeros(m.dim(), m.dim() * na);
    for (a, ra) in m.right_action()?.matrices.iter().enumerate() {
        for i in 0..m.dim() {
            for r in 0..m.dim() {
                flat.set(r, i * na + a, ra.get(r, i).clone());
            }
        }
    }
    let map = &flat * t.section();
    Ok((t, map))
}

/// `ϖ_N⁻ : A ⊗_A N → N`, `a ⊗ n ↦ a·n`.
pub fn left_multiplication_map(n: &Bimodule) -> Result<(TensorProduct, LinearMap)> {
    let alg = n.left_action()?.algebra.clone();
    let reg = Bimodule::regular(alg.clone()).without_left();
    let t = tensor_over(&reg, n)?;
    let na = alg.dim();
    let mut flat = ExactMatrix::zeros(n.dim(), na * n.dim());
    for (a, la) in n.left_action()?.matrices.iter().enumerate() {
        for i in 0..n.dim() {
            for r in 0..n.dim() {
                flat.set(r, a * n.dim() + i, la.get(r, i).clone());
            }
        }
    }
    let map = &flat * t.section();
    Ok((t, map))
}

#[derive(Clone, Debug)]
pub struct Firmness {
    pub firm: bool,
    pub tensor: TensorProduct,
    /// `ϖ`.
    pub multiplication: LinearMap,
    /// `d = ϖ⁻¹` when firm.
    pub inverse: Option<LinearMap>,
}

/// Right firmness: `ϖ_M⁺` bijective, with its inverse `d_M⁺`.
pub fn firmness(m: &Bimodule) -> Result<Firmness> {
    let (tensor, multiplication) = multiplication_map(m)?;
    let inverse = multiplication.inverse();
    Ok(Firmness { firm: inverse.is_some(), tensor, multiplication, inverse })
}

/// Left firmness: `ϖ_N⁻` bijective, with its inverse `d_N⁻`.
pub fn left_firmness(n: &Bimodule) -> Result<Firmness> {
    let (tensor, multiplication) = left_multiplication_map(n)?;
    let inverse = multiplication.inverse();
    Ok(Firmness { firm: inverse.is_some(), tensor, multiplication, inverse })
}

/// Firmness of the algebra itself; `d_A⁺` and `d_A⁻` live on the same
/// space `A ⊗_A A` and are compared as matrices.
#[derive(Clone, Debug)]
pub struct AlgebraFirmness {
    pub firm: bool,
    pub right: Firmness,
    pub left: Firmness,
    pub inverses_agree: bool,
}

pub fn algebra_firmness(a: Arc<Algebra>) -> Result<AlgebraFirmness> {
    let reg = Bimodule::regular(a);
    let right = firmness(&reg)?;
    let left = left_firmness(&reg)?;
    let inverses_agree = right.tensor.quotient == left.tensor.quotient && right.inverse == left.inverse;
    Ok(AlgebraFirmness { firm: right.firm && left.firm, right, left, inverses_agree })
}

/// A space of linear maps `source → target` cut out by linear constraints,
/// with maps vectorized row-major: entry `(r, c)` at index `r * source_dim + c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSpace {
    pub source_dim: usize,
    pub target_dim: usize,
    pub subspace: SubspacePresentation,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn vectorize(map: &ExactMatrix) -> Vector {
        map.entries().to_vec()
    }

    pub fn map_of(&self, coords: &[Rational]) -> ExactMatrix {
        let v = self.subspace.basis.apply(coords);
        ExactMatrix::from_entries(self.target_dim, self.source_dim, v).expect("hom-space vector shape")
    }

    pub fn basis_map(&self, k: usize) -> ExactMatrix {
        ExactMatrix::from_entries(self.target_dim, self.source_dim, self.subspace.basis.column(k))
            .expect("hom-space vector shape")
    }

    pub fn basis_maps(&self) -> Vec<ExactMatrix> {
        (0..self.dim()).map(|k| self.basis_map(k)).collect()
    }

    pub fn coordinates(&self, map: &ExactMatrix) -> Option<Vector> {
        if map.rows() != self.target_dim || map.cols() != self.source_dim {
            return None;
        }
        self.subspace.coordinates(&Self::vectorize(map))
    }

    /// Hom-space cut out by the kernel of a stacked constraint matrix acting
    /// on vectorized maps.
    pub fn from_constraints(source_dim: usize, target_dim: usize, constraints: &[ExactMatrix]) -> Self {
        let n = source_dim * target_dim;
        let refs: Vec<&ExactMatrix> = constraints.iter().collect();
        let stacked = ExactMatrix::vstack(&refs, n);
        HomSpace { source_dim, target_dim, subspace: kernel_basis(&stacked) }
    }

    /// Constraint matrix of `f ↦ L(f)` for a linear operator on maps, obtained
    /// by evaluating on elementary matrices.
    pub fn operator_matrix(
        source_dim: usize,
        target_dim: usize,
        out_dim: usize,
        op: impl Fn(&ExactMatrix) -> Vector,
    ) -> ExactMatrix {
        let n = source_dim * target_dim;
        let cols: Vec<Vector> = (0..n)
            .map(|idx| {
                let mut e = ExactMatrix::zeros(target_dim, source_dim);
                e.set(idx / source_dim, idx % source_dim, Rational::one());
                op(&e)
            })
            .collect();
        ExactMatrix::from_columns(out_dim, &cols)
    }
}

/// Constraints `f ∘ m_a = n_a ∘ f` on row-major vectorized maps `M → N`,
/// one block per basis element of the acting algebra.
pub fn kronecker_action_constraints(m: &Action, n: &Action, dm: usize, dn: usize) -> Vec<ExactMatrix> {
    let idm = ExactMatrix::identity(dm);
    let idn = ExactMatrix::identity(dn);
    m.matrices
        .iter()
        .zip(&n.matrices)
        .map(|(am, an)| &kronecker(an, &idm) - &kronecker(&idn, &am.transpose()))
        .collect()
}

/// `Hom_A(M, N)` for right `A`-modules, inside `Hom_Q(M, N)`.
pub fn hom_right(m: &Bimodule, n: &Bimodule) -> Result<HomSpace> {
    let (rm, rn) = (m.right_action()?, n.right_action()?);
    if rm.algebra != rn.algebra {
        return Err(Error::AlgebraMismatch("hom between modules over different algebras".into()));
    }
    let constraints = kronecker_action_constraints(rm, rn, m.dim(), n.dim());
    Ok(HomSpace::from_constraints(m.dim(), n.dim(), &constraints))
}

/// `Hom_A(M, N)` for left modules.
pub fn hom_left(m: &Bimodule, n: &Bimodule) -> Result<HomSpace> {
    let (lm, ln) = (m.left_action()?, n.left_action()?);
    if lm.algebra != ln.algebra {
        return Err(Error::AlgebraMismatch("hom between modules over different algebras".into()));
    }
    let constraints = kronecker_action_constraints(lm, ln, m.dim(), n.dim());
    Ok(HomSpace::from_constraints(m.dim(), n.dim(), &constraints))
}

/// `Σ* = Hom_A(Σ, A)` with `(a·φ·b)(x) = a·φ(b·x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualModule {
    pub module: Bimodule,
    pub hom: HomSpace,
    /// The pairing `Σ* ⊗_Q Σ → A`; column `p * dim Σ + j` is `φ_p(e_j)`.
    pub pairing: ExactMatrix,
}

impl DualModule {
    pub fn evaluate(&self, phi: &[Rational], x: &[Rational]) -> Vector {
        self.hom.map_of(phi).apply(x)
    }
}

pub fn sigma_star_bimodule(sigma: &Bimodule) -> Result<DualModule> {
    let a = sigma.right_action()?.algebra.clone();
    let a_right = Bimodule::regular_right(a.clone());
    let hom = hom_right(sigma, &a_right)?;
    let maps = hom.basis_maps();
    let d = maps.len();
    let na = a.dim();
    let coords = |f: &ExactMatrix| -> Result<Vector> {
        hom.coordinates(f).ok_or_else(|| Error::IllDefined("transported map is not A-linear".into()))
    };
    let mut left_mats = Vec::with_capacity(na);
    for i in 0..na {
        let la = a.left_multiplication(&unit_vector(na, i));
        let cols = maps.iter().map(|phi| coords(&(&la * phi))).collect::<Result<Vec<_>>>()?;
        left_mats.push(ExactMatrix::from_columns(d, &cols));
    }
    let right = match sigma.left() {
        Some(lb) => {
            let mut mats = Vec::with_capacity(lb.matrices.len());
            for b in &lb.matrices {
                let cols = maps.iter().map(|phi| coords(&(phi * b))).collect::<Result<Vec<_>>>()?;
                mats.push(ExactMatrix::from_columns(d, &cols));
            }
            Some(Action::new(lb.algebra.clone(), mats)?)
        }
        None => None,
    };
    let module = Bimodule::new(d, Some(Action::new(a, left_mats)?), right)?;
    let ds = sigma.dim();
    let mut pairing = ExactMatrix::zeros(na, d * ds);
    for (p, phi) in maps.iter().enumerate() {
        for j in 0..ds {
            for r in 0..na {
                pairing.set(r, p * ds + j, phi.get(r, j).clone());
            }
        }
    }
    Ok(DualModule { module, hom, pairing })
}

/// The B-ring `Σ ⊗_A Σ*` with multiplication `μ(x⊗φ, y⊗ψ) = x·φ(y) ⊗ ψ`.
#[derive(Clone, Debug)]
pub struct BRing {
    pub dual: DualModule,
    pub tensor: TensorProduct,
    /// `μ`, as structure constants on the quotient basis (no unit in general).
    pub algebra: Algebra,
    /// `Σ ⊗_A Σ* → End_Q(Σ)`, `x ⊗ φ ↦ (y ↦ x·φ(y))`, maps vectorized row-major.
    pub evaluation: ExactMatrix,
}

/// `μ` on flat representatives in `Σ ⊗_Q Σ*`.
fn mu_flat(sigma: &Bimodule, dual: &DualModule, u: &[Rational], v: &[Rational]) -> Result<Vector> {
    let ds = sigma.dim();
    let dd = dual.module.dim();
    let mut out = zero_vector(ds * dd);
    for (iu, cu) in u.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        let (i, p) = (iu / dd, iu % dd);
        for (jv, cv) in v.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            let (j, q) = (jv / dd, jv % dd);
            let a = dual.pairing.column(p * ds + j);
            let x = sigma.act_right(&a)?.column(i);
            let coef = cu * cv;
            for (k, xk) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out[k * dd + q] += &coef * xk;
            }
        }
    }
    Ok(out)
}

pub fn b_ring_mu(sigma: &Bimodule) -> Result<BRing> {
    let dual = sigma_star_bimodule(sigma)?;
    let tensor = tensor_over(sigma, &dual.module)?;
    let e = tensor.dim();
    let s = tensor.section();
    let mut structure = Vec::with_capacity(e * e * e);
    for k in 0..e {
        for l in 0..e {
            let prod = mu_flat(sigma, &dual, &s.column(k), &s.column(l))?;
            structure.extend(tensor.quotient.project(&prod));
        }
    }
    let algebra = Algebra::new(e, structure, None)?;
    let assoc = check_algebra(&algebra);
    if !assoc.passed() {
        let w = assoc.failures().next().and_then(|c| c.witness.clone()).unwrap_or_default();
        return Err(Error::Axiom(format!("μ is not associative: {w}")));
    }
    let ds = sigma.dim();
    let dd = dual.module.dim();
    let mut flat_eval = ExactMatrix::zeros(ds * ds, ds * dd);
    for i in 0..ds {
        for p in 0..dd {
            for j in 0..ds {
                let x = sigma.act_right(&dual.pairing.column(p * ds + j))?.column(i);
                for (r, xr) in x.into_iter().enumerate() {
                    flat_eval.set(r * ds + j, i * dd + p, xr);
                }
            }
        }
    }
    let evaluation = &flat_eval * s;
    Ok(BRing { dual, tensor, algebra, evaluation })
}

/// Checks that `ι : B → Σ ⊗_A Σ*` is multiplicative and `B`-bilinear.
pub fn iota_check(ring: &BRing, b: &Algebra, iota: &LinearMap) -> Result<AxiomReport> {
    let e = ring.tensor.dim();
    if iota.rows() != e || iota.cols() != b.dim() {
        return Err(Error::Dimension(format!("ι must be {e}x{}", b.dim())));
    }
    let mut report = AxiomReport::new("ι");
    let nb = b.dim();
    let w = (0..nb * nb).find_map(|ij| {
        let (i, j) = (ij / nb, ij % nb);
        let lhs = iota.apply(&b.basis_product(i, j));
        let rhs = ring.algebra.multiply(&iota.column(i), &iota.column(j));
        (lhs != rhs).then(|| format!("ι({}{}) ≠ ι({})ι({})", label(i), label(j), label(i), label(j)))
    });
    report.record("multiplicative", w);
    let module = &ring.tensor.module;
    if let (Some(l), Some(r)) = (module.left(), module.right()) {
        if *l.algebra != *b || *r.algebra != *b {
            return Err(Error::AlgebraMismatch("ι domain differs from the algebra acting on Σ".into()));
        }
        let w = (0..nb * nb).find_map(|ij| {
            let (i, j) = (ij / nb, ij % nb);
            let lhs = iota.apply(&b.basis_product(i, j));
            let left = l.matrices[i].apply(&iota.column(j));
            let right = r.matrices[j].apply(&iota.column(i));
            (lhs != left || lhs != right).then(|| format!("B-bilinearity fails at ({}, {})", label(i), label(j)))
        });
        report.record("B-bilinear", w);
    }
    Ok(report)
}

/// The dual-basis element `e = Σ_i e_i ⊗ e*_i ∈ Σ ⊗_A Σ*` with `Σ_i e_i·e*_i(x) = x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualBasisCertificate {
    /// Coordinates in the quotient basis of `Σ ⊗_A Σ*`.
    pub element: Vector,
    /// `(e_i, e*_i)` with `e_i ∈ Σ` and `e*_i` in coordinates of `Σ*`.
    pub pairs: Vec<(Vector, Vector)>,
}

impl DualBasisCertificate {
    /// `Σ_i e_i · e*_i(x)`.
    pub fn reconstruct(&self, sigma: &Bimodule, dual: &DualModule, x: &[Rational]) -> Result<Vector> {
        let mut out = zero_vector(sigma.dim());
        for (e, phi) in &self.pairs {
            let a = dual.evaluate(phi, x);
            let v = sigma.act_right(&a)?.apply(e);
            for (o, vi) in out.iter_mut().zip(v) {
                *o += vi;
            }
        }
        Ok(out)
    }

    pub fn verify(&self, sigma: &Bimodule, dual: &DualModule) -> Result<bool> {
        for j in 0..sigma.dim() {
            let x = unit_vector(sigma.dim(), j);
            if self.reconstruct(sigma, dual, &x)? != x {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Solves for a dual basis of `Σ` over unital `A`.
pub fn dual_basis(sigma: &Bimodule) -> Result<DualBasisCertificate> {
    let alg = sigma.right_action()?.algebra.clone();
    if !alg.is_unital() {
        return Err(Error::Unsupported("dual bases require a unital algebra".into()));
    }
    let ring = b_ring_mu(sigma)?;
    dual_basis_in(sigma, &ring)
}

pub fn dual_basis_in(sigma: &Bimodule, ring: &BRing) -> Result<DualBasisCertificate> {
    let id = HomSpace::vectorize(&ExactMatrix::identity(sigma.dim()));
    let element = ring
        .evaluation
        .solve(&id)
        .ok_or_else(|| Error::NotProjective("no element of Σ ⊗_A Σ* evaluates to the identity".into()))?;
    let flat = ring.tensor.section().apply(&element);
    let dd = ring.dual.module.dim();
    let ds = sigma.dim();
    let pairs = flat
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| {
            let mut e = zero_vector(ds);
            e[idx / dd] = c.clone();
            (e, unit_vector(dd, idx % dd))
        })
        .collect();
    Ok(DualBasisCertificate { element, pairs })
}

/// `true` iff `f` is bijective.
pub fn is_bijective(f: &LinearMap) -> bool {
    is_isomorphism(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(a: Algebra) -> Arc<Algebra> {
        Arc::new(a)
    }

    #[test]
    fn catalog_algebras_pass_axioms() {
        for a in [
            Algebra::scalars(),
            Algebra::quadratic_field(2),
            Algebra::cyclic_group_algebra(3),
            Algebra::matrix_algebra(2),
            Algebra::truncated_polynomial(3),
            Algebra::zero_product(2),
            Algebra::row_matrices(2),
            Algebra::direct_product(&Algebra::scalars(), &Algebra::quadratic_field(3)),
        ] {
            assert!(check_algebra(&a).passed(), "{a:?}");
        }
    }

    #[test]
    fn nonassociative_witness() {
        // e1e1 = e2, e2e1 = e1, everything else zero.
        let a = Algebra::from_products(2, None, |i, j| match (i, j) {
            (0, 0) => unit_vector(2, 1),
            (1, 0) => unit_vector(2, 0),
            _ => zero_vector(2),
        });
        let report = check_algebra(&a);
        let check = report.check("associativity").unwrap();
        assert!(!check.passed);
        assert!(check.witness.as_ref().unwrap().contains("(1,1,1)"));
    }

    #[test]
    fn tensor_dimensions() {
        let a = arc(Algebra::quadratic_field(2));
        let reg = Bimodule::regular(a.clone());
        assert_eq!(tensor_over(&reg, &reg).unwrap().dim(), 2);
        let b = Subalgebra::scalars(a.clone()).unwrap();
        let left = reg.clone().with_right(reg.right().unwrap().restrict(&b, 2).unwrap()).unwrap();
        let right = reg.clone().with_left(reg.left().unwrap().restrict(&b, 2).unwrap()).unwrap();
        assert_eq!(tensor_over(&left, &right).unwrap().dim(), 4);
    }

    #[test]
    fn zero_product_algebra_is_not_firm() {
        let a = arc(Algebra::zero_product(2));
        let f = firmness(&Bimodule::regular(a)).unwrap();
        assert_eq!(f.tensor.dim(), 4);
        assert!(f.multiplication.is_zero());
        assert!(!f.firm);
        assert!(f.inverse.is_none());
    }

    #[test]
    fn unital_algebra_is_firm_with_equal_inverses() {
        let a = arc(Algebra::quadratic_field(2));
        let f = algebra_firmness(a.clone()).unwrap();
        assert!(f.firm && f.inverses_agree);
        // d(1) is the class of 1 ⊗ 1.
        let d = f.right.inverse.unwrap();
        let one = a.unit().unwrap().clone();
        assert_eq!(d.apply(&one), f.right.tensor.class_of(&one, &one));
    }

    #[test]
    fn row_matrices_are_firm_but_not_unital() {
        let a = arc(Algebra::row_matrices(2));
        let f = algebra_firmness(a).unwrap();
        assert!(f.firm && f.inverses_agree);
    }

    #[test]
    fn zero_module_multiplication_is_bijective() {
        let a = arc(Algebra::quadratic_field(2));
        let zero = Bimodule::right_module(a, 0, vec![ExactMatrix::zeros(0, 0); 2]).unwrap();
        let f = firmness(&zero).unwrap();
        assert!(f.firm);
        assert_eq!(f.multiplication.rows(), 0);
    }

    #[test]
    fn hom_examples() {
        let a = arc(Algebra::quadratic_field(2));
        assert_eq!(hom_right(&Bimodule::regular_right(a.clone()), &Bimodule::regular_right(a.clone())).unwrap().dim(), 2);
        let q = arc(Algebra::scalars());
        assert_eq!(hom_right(&Bimodule::free_right(q.clone(), 2), &Bimodule::regular_right(q)).unwrap().dim(), 2);
        assert_eq!(hom_right(&Bimodule::free_right(a.clone(), 2), &Bimodule::regular_right(a)).unwrap().dim(), 4);
    }

    #[test]
    fn sigma_star_of_scalar_restriction() {
        // Σ = A over B = Q ⊂ A = Q(√2): Σ* has dimension 2 and B acts by scalars.
        let a = arc(Algebra::quadratic_field(2));
        let b = Subalgebra::scalars(a.clone()).unwrap();
        let reg = Bimodule::regular(a.clone());
        let sigma = reg.clone().with_left(reg.left().unwrap().restrict(&b, 2).unwrap()).unwrap();
        let dual = sigma_star_bimodule(&sigma).unwrap();
        assert_eq!(dual.module.dim(), 2);
        assert!(dual.module.right().unwrap().matrices[0].is_identity());
        assert!(check_module(&dual.module).passed());
    }

    #[test]
    fn b_ring_of_free_module_is_matrix_algebra() {
        let q = arc(Algebra::scalars());
        let sigma = Bimodule::free_right(q.clone(), 2);
        let ring = b_ring_mu(&sigma).unwrap();
        assert_eq!(ring.tensor.dim(), 4);
        // e_i ⊗ e*_j is the matrix unit E_ij: E_ij E_kl = δ_jk E_il.
        let m2 = Algebra::matrix_algebra(2);
        assert_eq!(ring.algebra.structure(), m2.structure());
    }

    #[test]
    fn non_projective_module_has_no_dual_basis() {
        // Q[x]/(x²) acting on Q with x ↦ 0.
        let a = arc(Algebra::truncated_polynomial(2));
        let sigma = Bimodule::right_module(a, 1, vec![ExactMatrix::identity(1), ExactMatrix::zeros(1, 1)]).unwrap();
        assert!(matches!(dual_basis(&sigma), Err(Error::NotProjective(_))));
    }

    #[test]
    fn dual_basis_of_regular_module() {
        let a = arc(Algebra::quadratic_field(2));
        let sigma = Bimodule::regular_right(a);
        let ring = b_ring_mu(&sigma).unwrap();
        let cert = dual_basis_in(&sigma, &ring).unwrap();
        assert!(cert.verify(&sigma, &ring.dual).unwrap());
    }

    #[test]
    fn tensor_morphism_rejects_unbalanced_maps() {
        let a = arc(Algebra::quadratic_field(2));
        let reg = Bimodule::regular(a);
        let t = tensor_over(&reg, &reg).unwrap();
        // swapping coordinates of A is Q-linear but not A-linear.
        let swap = ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert!(tensor_morphism(&t, &t, &swap, &ExactMatrix::identity(2)).is_err());
    }
}
