//! Corings over a finite-dimensional algebra, their right comodules,
//! comodule maps, grouplikes, coinvariants and the Sweedler coring.

use std::sync::Arc;

use num_traits::Zero;

use crate::algebra::{
    algebra_firmness, check_module, kronecker_action_constraints, left_multiplication_map, multiplication_map,
    tensor_morphism, tensor_over, transport, Action, Algebra, Bimodule, HomSpace, Subalgebra, TensorProduct,
};
use crate::axioms::AxiomReport;
use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, unit_vector, ExactMatrix, LinearMap, Rational, Vector};

/// Compares two maps with the same shape; on mismatch names the first basis
/// vector where they differ.
pub(crate) fn differ(lhs: &ExactMatrix, rhs: &ExactMatrix) -> Option<String> {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return Some(format!("shape {}x{} vs {}x{}", lhs.rows(), lhs.cols(), rhs.rows(), rhs.cols()));
    }
    lhs.first_differing_column(rhs).map(|c| format!("differs on basis vector {}", c + 1))
}

fn linearity_witness(left: &[ExactMatrix], right: &[ExactMatrix], f: &ExactMatrix) -> Option<String> {
    left.iter().zip(right).enumerate().find_map(|(a, (out, inn))| {
        differ(&(out * f), &(f * inn)).map(|w| format!("action of e{}: {w}", a + 1))
    })
}

/// An `A`-coring `(C, Δ, ε)`.
#[derive(Clone, Debug)]
pub struct Coring {
    pub algebra: Arc<Algebra>,
    pub carrier: Bimodule,
    /// `C ⊗_A C`.
    pub square: TensorProduct,
    pub delta: LinearMap,
    pub epsilon: LinearMap,
    /// Candidates tried by the grouplike scan.
    pub candidates: Vec<Vector>,
}

impl Coring {
    pub fn new(algebra: Arc<Algebra>, carrier: Bimodule, delta: LinearMap, epsilon: LinearMap) -> Result<Self> {
        let (l, r) = (carrier.left_action()?, carrier.right_action()?);
        if *l.algebra != *algebra || *r.algebra != *algebra {
            return Err(Error::AlgebraMismatch("coring carrier is not a bimodule over the coring's algebra".into()));
        }
        let square = tensor_over(&carrier, &carrier)?;
        let n = carrier.dim();
        if delta.rows() != square.dim() || delta.cols() != n {
            return Err(Error::Dimension(format!(
                "Δ must be {}x{n} (C⊗_A C has dimension {}), got {}x{}",
                square.dim(),
                square.dim(),
                delta.rows(),
                delta.cols()
            )));
        }
        if epsilon.rows() != algebra.dim() || epsilon.cols() != n {
            return Err(Error::Dimension(format!(
                "ε must be {}x{n}, got {}x{}",
                algebra.dim(),
                epsilon.rows(),
                epsilon.cols()
            )));
        }
        Ok(Coring { algebra, carrier, square, delta, epsilon, candidates: Vec::new() })
    }

    pub fn with_candidates(mut self, candidates: Vec<Vector>) -> Self {
        self.candidates = candidates;
        self
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// The trivial coring `A` with `Δ = d_A` and `ε = id`; needs `A` firm.
    pub fn trivial(algebra: Arc<Algebra>) -> Result<Self> {
        let firm = algebra_firmness(algebra.clone())?;
        let d = firm
            .right
            .inverse
            .ok_or_else(|| Error::Unsupported("the trivial coring needs a firm algebra".into()))?;
        let carrier = Bimodule::regular(algebra.clone());
        let n = algebra.dim();
        let candidates = algebra.unit().cloned().into_iter().collect();
        Ok(Coring::new(algebra, carrier, d, ExactMatrix::identity(n))?.with_candidates(candidates))
    }

    /// `C ⊗_A C ⊗_A C` in both bracketings plus the transport between them.
    fn cubes(&self) -> Result<(TensorProduct, TensorProduct, LinearMap)> {
        let left = tensor_over(&self.square.module, &self.carrier)?;
        let right = tensor_over(&self.carrier, &self.square.module)?;
        let t = transport(&left.module, &right.module)?;
        Ok((left, right, t))
    }
}

/// Bimodule linearity of `Δ` and `ε`, coassociativity and both counit laws.
pub fn check_coring(c: &Coring) -> AxiomReport {
    let mut report = AxiomReport::new("coring");
    report.merge(check_module(&c.carrier));
    let (cl, cr) = (c.carrier.left().unwrap(), c.carrier.right().unwrap());
    let sq = &c.square.module;
    report.record("Δ left A-linear", linearity_witness(&sq.left().unwrap().matrices, &cl.matrices, &c.delta));
    report.record("Δ right A-linear", linearity_witness(&sq.right().unwrap().matrices, &cr.matrices, &c.delta));
    let reg = Bimodule::regular(c.algebra.clone());
    report.record("ε left A-linear", linearity_witness(&reg.left().unwrap().matrices, &cl.matrices, &c.epsilon));
    report.record("ε right A-linear", linearity_witness(&reg.right().unwrap().matrices, &cr.matrices, &c.epsilon));

    let n = c.dim();
    let id = ExactMatrix::identity(n);
    let coassoc = c.cubes().and_then(|(left, right, t)| {
        let lhs = &(&t * &tensor_morphism(&c.square, &left, &c.delta, &id)?) * &c.delta;
        let rhs = &tensor_morphism(&c.square, &right, &id, &c.delta)? * &c.delta;
        Ok(differ(&lhs, &rhs))
    });
    report.record("coassociativity", coassoc.unwrap_or_else(|e| Some(e.to_string())));

    let left_counit = left_multiplication_map(&c.carrier).and_then(|(t, mult)| {
        let lhs = &(&mult * &tensor_morphism(&c.square, &t, &c.epsilon, &id)?) * &c.delta;
        Ok(differ(&lhs, &id))
    });
    report.record("left counit", left_counit.unwrap_or_else(|e| Some(e.to_string())));
    let right_counit = multiplication_map(&c.carrier).and_then(|(t, mult)| {
        let lhs = &(&mult * &tensor_morphism(&c.square, &t, &id, &c.epsilon)?) * &c.delta;
        Ok(differ(&lhs, &id))
    });
    report.record("right counit", right_counit.unwrap_or_else(|e| Some(e.to_string())));
    report
}

/// Homomorphism of corings `φ: src → dst` over the same algebra.
pub fn check_coring_morphism(src: &Coring, dst: &Coring, phi: &LinearMap) -> Result<AxiomReport> {
    if src.algebra != dst.algebra {
        return Err(Error::AlgebraMismatch("coring morphism between corings over different algebras".into()));
    }
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return Err(Error::Dimension(format!("coring morphism must be {}x{}", dst.dim(), src.dim())));
    }
    let mut report = AxiomReport::new("coring morphism");
    report.record(
        "left A-linear",
        linearity_witness(&dst.carrier.left_action()?.matrices, &src.carrier.left_action()?.matrices, phi),
    );
    report.record(
        "right A-linear",
        linearity_witness(&dst.carrier.right_action()?.matrices, &src.carrier.right_action()?.matrices, phi),
    );
    let lhs = &tensor_morphism(&src.square, &dst.square, phi, phi)? * &src.delta;
    let rhs = &dst.delta * phi;
    report.record("comultiplicative", differ(&lhs, &rhs));
    report.record("counital", differ(&(&dst.epsilon * phi), &src.epsilon));
    Ok(report)
}

/// A right `C`-comodule; a left action on the carrier, when present, makes it a bicomodule.
#[derive(Clone, Debug)]
pub struct Comodule {
    pub coring: Arc<Coring>,
    pub carrier: Bimodule,
    /// `X ⊗_A C`.
    pub tensor: TensorProduct,
    pub coaction: LinearMap,
}

impl Comodule {
    pub fn new(coring: Arc<Coring>, carrier: Bimodule, coaction: LinearMap) -> Result<Self> {
        if *carrier.right_action()?.algebra != *coring.algebra {
            return Err(Error::AlgebraMismatch("comodule carrier is not a module over the coring's algebra".into()));
        }
        let tensor = tensor_over(&carrier, &coring.carrier)?;
        if coaction.rows() != tensor.dim() || coaction.cols() != carrier.dim() {
            return Err(Error::Dimension(format!(
                "coaction must be {}x{}, got {}x{}",
                tensor.dim(),
                carrier.dim(),
                coaction.rows(),
                coaction.cols()
            )));
        }
        Ok(Comodule { coring, carrier, tensor, coaction })
    }

    /// `C` with `ρ = Δ`.
    pub fn cofree(coring: Arc<Coring>) -> Result<Self> {
        let carrier = coring.carrier.clone();
        let delta = coring.delta.clone();
        Comodule::new(coring, carrier, delta)
    }

    /// `M ⊗_A C` with coaction `M ⊗ Δ`, i.e. the comonad `− ⊗_A C` applied to `M`.
    pub fn induced(coring: Arc<Coring>, m: &Bimodule) -> Result<Self> {
        let mc = tensor_over(m, &coring.carrier)?;
        let m_cc = tensor_over(m, &coring.square.module)?;
        let carrier = mc.module.clone();
        let mc_c = tensor_over(&carrier, &coring.carrier)?;
        let id = ExactMatrix::identity(m.dim());
        let coaction = &transport(&m_cc.module, &mc_c.module)? * &tensor_morphism(&mc, &m_cc, &id, &coring.delta)?;
        Comodule::new(coring, carrier, coaction)
    }

    pub fn zero(coring: Arc<Coring>) -> Result<Self> {
        let na = coring.algebra.dim();
        let carrier = Bimodule::right_module(coring.algebra.clone(), 0, vec![ExactMatrix::zeros(0, 0); na])?;
        Comodule::new(coring, carrier, ExactMatrix::zeros(0, 0))
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `X ⊗_A (C ⊗_A C)` and `(X ⊗_A C) ⊗_A C` with the transport from the former.
    pub(crate) fn cubes(&self) -> Result<(TensorProduct, TensorProduct, LinearMap)> {
        let x_cc = tensor_over(&self.carrier, &self.coring.square.module)?;
        let xc_c = tensor_over(&self.tensor.module, &self.coring.carrier)?;
        let t = transport(&x_cc.module, &xc_c.module)?;
        Ok((x_cc, xc_c, t))
    }

    /// `X ⊗ ε` followed by `ϖ_X`, the map `X ⊗_A C → X`.
    pub fn counit_map(&self) -> Result<LinearMap> {
        let (t, mult) = multiplication_map(&self.carrier)?;
        let id = ExactMatrix::identity(self.dim());
        Ok(&mult * &tensor_morphism(&self.tensor, &t, &id, &self.coring.epsilon)?)
    }
}

/// Module axioms, linearity of `ρ`, coassociativity and the counit law.
pub fn check_comodule(x: &Comodule) -> AxiomReport {
    let mut report = AxiomReport::new("comodule");
    report.merge(check_module(&x.carrier));
    let out = &x.tensor.module;
    if let (Some(o), Some(i)) = (out.right(), x.carrier.right()) {
        report.record("ρ right A-linear", linearity_witness(&o.matrices, &i.matrices, &x.coaction));
    }
    if let (Some(o), Some(i)) = (out.left(), x.carrier.left()) {
        report.record("ρ left linear", linearity_witness(&o.matrices, &i.matrices, &x.coaction));
    }
    let id_x = ExactMatrix::identity(x.dim());
    let id_c = ExactMatrix::identity(x.coring.dim());
    let coassoc = x.cubes().and_then(|(x_cc, xc_c, t)| {
        let lhs = &tensor_morphism(&x.tensor, &xc_c, &x.coaction, &id_c)? * &x.coaction;
        let rhs = &(&t * &tensor_morphism(&x.tensor, &x_cc, &id_x, &x.coring.delta)?) * &x.coaction;
        Ok(differ(&lhs, &rhs))
    });
    report.record("coassociativity", coassoc.unwrap_or_else(|e| Some(e.to_string())));
    let counit = x.counit_map().map(|e| differ(&(&e * &x.coaction), &id_x));
    report.record("counit", counit.unwrap_or_else(|e| Some(e.to_string())));
    report
}

/// The comonad `− ⊗_A C` is lawful at `M`: both counit laws and
/// coassociativity of `Δ_M = M ⊗ Δ`.
pub fn check_comonad_on(coring: Arc<Coring>, m: &Bimodule) -> Result<AxiomReport> {
    let g = Comodule::induced(coring.clone(), m)?;
    let mut report = check_comodule(&g);
    report.subject = "comonad".into();
    let (t, mult) = multiplication_map(m)?;
    let mc = tensor_over(m, &coring.carrier)?;
    let eps_m = &mult * &tensor_morphism(&mc, &t, &ExactMatrix::identity(m.dim()), &coring.epsilon)?;
    let g_eps = tensor_morphism(&g.tensor, &mc, &eps_m, &ExactMatrix::identity(coring.dim()))?;
    report.record("G(ε) ∘ Δ", differ(&(&g_eps * &g.coaction), &ExactMatrix::identity(g.dim())));
    Ok(report)
}

fn same_coring(x: &Comodule, y: &Comodule) -> Result<()> {
    if Arc::ptr_eq(&x.coring, &y.coring) || x.coring.delta == y.coring.delta && x.coring.epsilon == y.coring.epsilon && x.coring.carrier == y.coring.carrier {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch("comodules over different corings".into()))
    }
}

/// `f` is right `A`-linear and `ρ_Y ∘ f = (f ⊗ C) ∘ ρ_X`.
pub fn check_comodule_map(f: &LinearMap, x: &Comodule, y: &Comodule) -> Result<bool> {
    same_coring(x, y)?;
    if f.rows() != y.dim() || f.cols() != x.dim() {
        return Err(Error::Dimension(format!("comodule map must be {}x{}", y.dim(), x.dim())));
    }
    let linear = linearity_witness(&y.carrier.right_action()?.matrices, &x.carrier.right_action()?.matrices, f).is_none();
    let id_c = ExactMatrix::identity(x.coring.dim());
    let lhs = &y.coaction * f;
    let rhs = &tensor_morphism(&x.tensor, &y.tensor, f, &id_c)? * &x.coaction;
    Ok(linear && lhs == rhs)
}

/// `Hom^C(X, Y)` inside `Hom_Q(X, Y)`.
pub fn comodule_hom_space(x: &Comodule, y: &Comodule) -> Result<HomSpace> {
    same_coring(x, y)?;
    let (dx, dy) = (x.dim(), y.dim());
    let mut constraints = kronecker_action_constraints(x.carrier.right_action()?, y.carrier.right_action()?, dx, dy);
    let id_c = ExactMatrix::identity(x.coring.dim());
    let s = x.tensor.section();
    let p = y.tensor.projection();
    let intertwine = HomSpace::operator_matrix(dx, dy, y.tensor.dim() * dx, |f| {
        let lhs = &y.coaction * f;
        let rhs = &(&(p * &crate::linalg::kronecker(f, &id_c)) * s) * &x.coaction;
        (&lhs - &rhs).entries().to_vec()
    });
    constraints.push(intertwine);
    Ok(HomSpace::from_constraints(dx, dy, &constraints))
}

/// `End^C(X)` with composition, and its canonical left action on `X`.
#[derive(Clone, Debug)]
pub struct EndomorphismRing {
    pub hom: HomSpace,
    pub algebra: Arc<Algebra>,
    pub action: Action,
}

pub fn endomorphism_ring(x: &Comodule) -> Result<EndomorphismRing> {
    let hom = comodule_hom_space(x, x)?;
    let maps = hom.basis_maps();
    let n = maps.len();
    let mut structure = Vec::with_capacity(n * n * n);
    for f in &maps {
        for g in &maps {
            let coords = hom
                .coordinates(&(f * g))
                .ok_or_else(|| Error::Axiom("composite of comodule maps left the hom-space".into()))?;
            structure.extend(coords);
        }
    }
    let unit = hom
        .coordinates(&ExactMatrix::identity(x.dim()))
        .ok_or_else(|| Error::Axiom("identity is not a comodule map".into()))?;
    let algebra = Arc::new(Algebra::new(n, structure, Some(unit))?);
    let report = crate::algebra::check_algebra(&algebra);
    if !report.passed() {
        return Err(Error::Axiom("endomorphism ring fails the algebra axioms".into()));
    }
    let action = Action::new(algebra.clone(), maps)?;
    Ok(EndomorphismRing { hom, algebra, action })
}

/// `Δ(g) = g ⊗ g` and `ε(g) = 1`.
pub fn is_grouplike(c: &Coring, g: &[Rational]) -> bool {
    let Some(unit) = c.algebra.unit() else { return false };
    g.len() == c.dim() && c.epsilon.apply(g) == *unit && c.delta.apply(g) == c.square.class_of(g, g)
}

/// The defining system of grouplikes (linear `ε(g) = 1`, quadratic
/// `Δ(g) = g ⊗ g`) and the candidates that satisfy it.
#[derive(Clone, Debug)]
pub struct GrouplikeScan {
    pub epsilon: LinearMap,
    pub unit: Vector,
    pub delta: LinearMap,
    /// `C ⊗_Q C → C ⊗_A C`, so that `Δ(g) = projection · (g ⊗ g)`.
    pub projection: LinearMap,
    pub found: Vec<Vector>,
}

pub fn grouplikes(c: &Coring) -> Result<GrouplikeScan> {
    let unit = c
        .algebra
        .unit()
        .cloned()
        .ok_or_else(|| Error::Unsupported("grouplikes need a unital algebra".into()))?;
    let mut found: Vec<Vector> = Vec::new();
    for g in &c.candidates {
        if is_grouplike(c, g) && !found.contains(g) {
            found.push(g.clone());
        }
    }
    Ok(GrouplikeScan {
        epsilon: c.epsilon.clone(),
        unit,
        delta: c.delta.clone(),
        projection: c.square.projection().clone(),
        found,
    })
}

/// `A` with `ρ_g(a) = g·a` under `A ⊗_A C ≅ C`.
pub fn coaction_from_grouplike(c: Arc<Coring>, g: &[Rational]) -> Result<Comodule> {
    if !is_grouplike(&c, g) {
        return Err(Error::Axiom("not a grouplike element".into()));
    }
    let alg = c.algebra.clone();
    let unit = alg.unit().cloned().expect("grouplike implies unital");
    let carrier = Bimodule::regular_right(alg.clone());
    let n = alg.dim();
    let tensor = tensor_over(&carrier, &c.carrier)?;
    let cols: Vec<Vector> = (0..n)
        .map(|a| {
            let ga = c.carrier.act_right(&unit_vector(n, a)).map(|r| r.apply(g))?;
            Ok(tensor.class_of(&unit, &ga))
        })
        .collect::<Result<_>>()?;
    let coaction = ExactMatrix::from_columns(tensor.dim(), &cols);
    Comodule::new(c, carrier, coaction)
}

/// `{a ∈ A : a·g = g·a}`.
pub fn coinvariants(c: &Coring, g: &[Rational]) -> Result<Subalgebra> {
    if g.len() != c.dim() {
        return Err(Error::Dimension("grouplike has the wrong length".into()));
    }
    let n = c.algebra.dim();
    let cols: Vec<Vector> = (0..n)
        .map(|a| {
            let e = unit_vector(n, a);
            let l = c.carrier.act_left(&e)?.apply(g);
            let r = c.carrier.act_right(&e)?.apply(g);
            Ok(l.iter().zip(&r).map(|(x, y)| x - y).collect())
        })
        .collect::<Result<_>>()?;
    let kernel = kernel_basis(&ExactMatrix::from_columns(c.dim(), &cols));
    Subalgebra::new(c.algebra.clone(), &kernel.basis)
}

/// `A ⊗_B A` with `Δ(a ⊗ a′) = (a ⊗ 1) ⊗_A (1 ⊗ a′)` and `ε(a ⊗ a′) = aa′`.
pub fn sweedler_coring(sub: &Subalgebra) -> Result<Coring> {
    let alg = sub.ambient.clone();
    let unit = alg
        .unit()
        .cloned()
        .ok_or_else(|| Error::Unsupported("the Sweedler coring needs a unital algebra".into()))?;
    if sub.algebra.unit().is_none() {
        return Err(Error::Unsupported("the Sweedler coring needs 1 ∈ B".into()));
    }
    let n = alg.dim();
    let reg = Bimodule::regular(alg.clone());
    let a_b = reg.clone().with_right(reg.right_action()?.restrict(sub, n)?)?;
    let b_a = reg.clone().with_left(reg.left_action()?.restrict(sub, n)?)?;
    let t = tensor_over(&a_b, &b_a)?;
    let carrier = t.module.clone().atomic();
    let square = tensor_over(&carrier, &carrier)?;
    let flat_cols: Vec<Vector> = (0..n * n)
        .map(|ij| square.class_of(&t.class_of(&unit_vector(n, ij / n), &unit), &t.class_of(&unit, &unit_vector(n, ij % n))))
        .collect();
    let flat_delta = ExactMatrix::from_columns(square.dim(), &flat_cols);
    if !(&flat_delta * &t.relations).is_zero() {
        return Err(Error::IllDefined("Sweedler comultiplication does not respect B-balancing".into()));
    }
    let delta = &flat_delta * t.section();
    let epsilon = &alg.multiplication_matrix() * t.section();
    let g = t.class_of(&unit, &unit);
    Ok(Coring::new(alg, carrier, delta, epsilon)?.with_candidates(vec![g]))
}

/// The matrix coalgebra on `M_n(Q)^*` with basis `E_ij` (index `i * n + j`):
/// `Δ(E_ij) = Σ_k E_ik ⊗ E_kj`, `ε(E_ij) = δ_ij`.
pub fn matrix_coalgebra(n: usize) -> Result<Coring> {
    let q = Arc::new(Algebra::scalars());
    let d = n * n;
    let carrier = Bimodule::new(
        d,
        Some(Action::new(q.clone(), vec![ExactMatrix::identity(d)])?),
        Some(Action::new(q.clone(), vec![ExactMatrix::identity(d)])?),
    )?;
    let square = tensor_over(&carrier, &carrier)?;
    let cols: Vec<Vector> = (0..d)
        .map(|ij| {
            let (i, j) = (ij / n, ij % n);
            let mut v = crate::linalg::zero_vector(square.dim());
            for k in 0..n {
                let w = square.class_of(&unit_vector(d, i * n + k), &unit_vector(d, k * n + j));
                for (a, b) in v.iter_mut().zip(w) {
                    *a += b;
                }
            }
            v
        })
        .collect();
    let delta = ExactMatrix::from_columns(square.dim(), &cols);
    let epsilon = ExactMatrix::from_fn(1, d, |_, ij| if ij / n == ij % n { crate::linalg::rational(1) } else { Rational::zero() });
    Coring::new(q, carrier, delta, epsilon)
}

/// The group coalgebra `Q[Z/n]` over `Q`: every group element is grouplike.
pub fn group_coalgebra(n: usize) -> Result<Coring> {
    let q = Arc::new(Algebra::scalars());
    let carrier = Bimodule::new(
        n,
        Some(Action::new(q.clone(), vec![ExactMatrix::identity(n)])?),
        Some(Action::new(q.clone(), vec![ExactMatrix::identity(n)])?),
    )?;
    let square = tensor_over(&carrier, &carrier)?;
    let cols: Vec<Vector> = (0..n).map(|g| square.class_of(&unit_vector(n, g), &unit_vector(n, g))).collect();
    let delta = ExactMatrix::from_columns(square.dim(), &cols);
    let epsilon = ExactMatrix::from_fn(1, n, |_, _| crate::linalg::rational(1));
    let candidates = (0..n).map(|g| unit_vector(n, g)).collect();
    Ok(Coring::new(q, carrier, delta, epsilon)?.with_candidates(candidates))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sweedler_sqrt2() -> Coring {
        let a = Arc::new(Algebra::quadratic_field(2));
        sweedler_coring(&Subalgebra::scalars(a).unwrap()).unwrap()
    }

    #[test]
    fn trivial_coring_passes() {
        let c = Coring::trivial(Arc::new(Algebra::quadratic_field(2))).unwrap();
        assert!(check_coring(&c).passed());
    }

    #[test]
    fn sweedler_passes_and_broken_counit_fails() {
        let c = sweedler_sqrt2();
        assert_eq!(c.dim(), 4);
        assert!(check_coring(&c).passed(), "{:?}", check_coring(&c));
        let mut broken = c.clone();
        broken.epsilon = ExactMatrix::zeros(2, 4);
        let report = check_coring(&broken);
        assert!(!report.check("left counit").unwrap().passed);
        assert!(!report.check("right counit").unwrap().passed);
    }

    #[test]
    fn sweedler_over_whole_algebra_is_trivial() {
        let a = Arc::new(Algebra::quadratic_field(2));
        let c = sweedler_coring(&Subalgebra::whole(a)).unwrap();
        assert_eq!(c.dim(), 2);
        assert!(check_coring(&c).passed());
    }

    #[test]
    fn sweedler_grouplike_and_coinvariants() {
        let c = Arc::new(sweedler_sqrt2());
        let scan = grouplikes(&c).unwrap();
        assert_eq!(scan.found.len(), 1);
        let g = scan.found[0].clone();
        assert_eq!(coinvariants(&c, &g).unwrap().dim(), 1);
        let x = coaction_from_grouplike(c.clone(), &g).unwrap();
        assert!(check_comodule(&x).passed());
        assert_eq!(endomorphism_ring(&x).unwrap().algebra.dim(), 1);
    }

    #[test]
    fn cofree_comodule_passes_and_zero_coaction_fails() {
        let c = Arc::new(sweedler_sqrt2());
        let x = Comodule::cofree(c.clone()).unwrap();
        assert!(check_comodule(&x).passed());
        let zero = Comodule::new(c, x.carrier.clone(), ExactMatrix::zeros(x.tensor.dim(), 4)).unwrap();
        assert!(!check_comodule(&zero).check("counit").unwrap().passed);
    }

    #[test]
    fn group_coalgebra_grouplike_comodules() {
        let c = Arc::new(group_coalgebra(2).unwrap());
        assert!(check_coring(&c).passed());
        let e = coaction_from_grouplike(c.clone(), &unit_vector(2, 0)).unwrap();
        let s = coaction_from_grouplike(c.clone(), &unit_vector(2, 1)).unwrap();
        assert!(check_comodule(&e).passed() && check_comodule(&s).passed());
        let id = ExactMatrix::identity(1);
        assert!(check_comodule_map(&id, &e, &e).unwrap());
        assert!(check_comodule_map(&ExactMatrix::zeros(1, 1), &e, &s).unwrap());
        assert!(!check_comodule_map(&id, &e, &s).unwrap());
        assert_eq!(comodule_hom_space(&e, &s).unwrap().dim(), 0);
        assert_eq!(coinvariants(&c, &unit_vector(2, 0)).unwrap().dim(), 1);
    }

    #[test]
    fn matrix_coalgebra_passes() {
        let c = Arc::new(matrix_coalgebra(2).unwrap());
        assert!(check_coring(&c).passed());
        assert!(check_comodule(&Comodule::cofree(c).unwrap()).passed());
    }

    #[test]
    fn comonad_is_lawful_on_free_and_torsion_modules() {
        let c = Arc::new(sweedler_sqrt2());
        let a = c.algebra.clone();
        assert!(check_comonad_on(c.clone(), &Bimodule::free_right(a.clone(), 2)).unwrap().passed());
        assert!(check_comonad_on(c, &Bimodule::regular_right(a)).unwrap().passed());
    }

    #[test]
    fn trivial_coring_endomorphisms_recover_the_algebra() {
        let c = Arc::new(Coring::trivial(Arc::new(Algebra::quadratic_field(3))).unwrap());
        let x = Comodule::cofree(c).unwrap();
        assert_eq!(endomorphism_ring(&x).unwrap().algebra.dim(), 2);
    }

    #[test]
    fn zero_comodule() {
        let c = Arc::new(sweedler_sqrt2());
        let z = Comodule::zero(c).unwrap();
        assert!(check_comodule(&z).passed());
    }
}
