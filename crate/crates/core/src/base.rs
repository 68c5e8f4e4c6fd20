//! Finite-dimensional augmented commutative local base algebras `A = K ⊕ m`,
//! canonical constructions (`C_1`, truncated polynomials), reduced Harrison
//! cohomology in degrees 1 and 2 with trivial coefficients, and 1-dimensional
//! base extensions built from Harrison 2-cocycles.
//!
//! A base is stored by the multiplication table of its maximal ideal `m`;
//! the unit and the augmentation `ε` (`ε(1) = 1`, `ε(m) = 0`) are implicit.

use crate::error::Error;
use crate::exactla::{kernel_basis, quotient_complement, Matrix, Rational, Subspace};
use crate::Result;
use num_traits::Zero;

/// A local commutative base algebra `K ⊕ m` given by the table of `m`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalAlgebraBase {
    m_dim: usize,
    /// `m_mult[i][j][k]` = coefficient of `m_k` in `m_i · m_j`.
    m_mult: Vec<Vec<Vec<Rational>>>,
    labels: Vec<String>,
}

impl LocalAlgebraBase {
    /// Builds a base and verifies the axioms (commutative, associative,
    /// nilpotent `m`). Pass `None` to auto-generate labels `m1, m2, ...`.
    pub fn new(
        m_dim: usize,
        m_mult: Vec<Vec<Vec<Rational>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let base = Self::new_unchecked(m_dim, m_mult, labels)?;
        if !base.is_commutative() {
            return Err(Error::InvalidBase(
                "multiplication table is not commutative".into(),
            ));
        }
        if !base.is_associative() {
            return Err(Error::InvalidBase(
                "multiplication table is not associative".into(),
            ));
        }
        if !base.is_nilpotent() {
            return Err(Error::InvalidBase(
                "the maximal ideal is not nilpotent".into(),
            ));
        }
        Ok(base)
    }

    /// Builds a base checking only shapes, not the axioms.
    pub fn new_unchecked(
        m_dim: usize,
        m_mult: Vec<Vec<Vec<Rational>>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        if m_mult.len() != m_dim
            || m_mult
                .iter()
                .any(|row| row.len() != m_dim || row.iter().any(|v| v.len() != m_dim))
        {
            return Err(Error::ShapeMismatch(format!(
                "multiplication table must be {m_dim}x{m_dim}x{m_dim}"
            )));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != m_dim {
                    return Err(Error::ShapeMismatch(format!(
                        "expected {m_dim} labels, got {}",
                        l.len()
                    )));
                }
                l
            }
            None => (1..=m_dim).map(|i| format!("m{i}")).collect(),
        };
        Ok(LocalAlgebraBase {
            m_dim,
            m_mult,
            labels,
        })
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn mult_table(&self) -> &Vec<Vec<Vec<Rational>>> {
        &self.m_mult
    }

    /// The product `m_i · m_j` as a coefficient vector over the `m`-basis.
    pub fn product_of_basis(&self, i: usize, j: usize) -> &[Rational] {
        &self.m_mult[i][j]
    }

    /// Bilinear extension of the table to coefficient vectors in `m`.
    pub fn multiply(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.m_dim);
        assert_eq!(y.len(), self.m_dim);
        let mut out = vec![Rational::zero(); self.m_dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi * yj;
                for (k, c) in self.m_mult[i][j].iter().enumerate() {
                    if !c.is_zero() {
                        out[k] += &scale * c;
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        for i in 0..self.m_dim {
            for j in 0..i {
                if self.m_mult[i][j] != self.m_mult[j][i] {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_associative(&self) -> bool {
        for i in 0..self.m_dim {
            for j in 0..self.m_dim {
                let ij = &self.m_mult[i][j];
                for k in 0..self.m_dim {
                    let left = self.multiply(ij, &self.basis_vector(k));
                    let right = self.multiply(&self.basis_vector(i), &self.m_mult[j][k]);
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether some power of `m` vanishes. The chain `m ⊇ m² ⊇ ...` strictly
    /// decreases until it stabilizes, so at most `m_dim` products decide it.
    pub fn is_nilpotent(&self) -> bool {
        let mut power = Subspace::full(self.m_dim);
        loop {
            let next = self.ideal_product(&power);
            if next.dim() == 0 {
                return true;
            }
            if next.dim() == power.dim() {
                return false;
            }
            power = next;
        }
    }

    /// The span of products of a subspace of `m` with all of `m`.
    fn ideal_product(&self, v: &Subspace<Rational>) -> Subspace<Rational> {
        let mut products = Vec::new();
        for row in v.basis() {
            for j in 0..self.m_dim {
                let p = self.multiply(row, &self.basis_vector(j));
                if !p.iter().all(Zero::is_zero) {
                    products.push(p);
                }
            }
        }
        Subspace::from_spanning(self.m_dim, products)
    }

    /// The subspace `m²` = span of all basis products.
    pub fn m_squared(&self) -> Subspace<Rational> {
        self.ideal_product(&Subspace::full(self.m_dim))
    }

    pub fn is_infinitesimal(&self) -> bool {
        self.m_squared().dim() == 0
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.m_dim];
        v[i] = crate::rint(1);
        v
    }

    /// For a functional `phi` on `m`, the matrix `c[i][j] = phi(m_i · m_j)` —
    /// the comultiplication coefficients dual to the product.
    pub fn comultiplication(&self, phi: &[Rational]) -> Vec<Vec<Rational>> {
        assert_eq!(phi.len(), self.m_dim);
        let mut c = vec![vec![Rational::zero(); self.m_dim]; self.m_dim];
        for i in 0..self.m_dim {
            for j in 0..self.m_dim {
                let mut acc = Rational::zero();
                for (s, coeff) in self.m_mult[i][j].iter().enumerate() {
                    if !coeff.is_zero() && !phi[s].is_zero() {
                        acc += coeff * &phi[s];
                    }
                }
                c[i][j] = acc;
            }
        }
        c
    }
}

/// True iff the table is commutative, associative, and `m` is nilpotent.
pub fn check_base_axioms(a: &LocalAlgebraBase) -> bool {
    a.is_commutative() && a.is_associative() && a.is_nilpotent()
}

/// `K[t]/(t^{k+1})` with `m`-basis `t, t², ..., t^k`.
pub fn truncated_polynomial_base(k: usize) -> LocalAlgebraBase {
    assert!(k >= 1, "truncation order must be at least 1");
    let mut m_mult = vec![vec![vec![Rational::zero(); k]; k]; k];
    for i in 0..k {
        for j in 0..k {
            // t^{i+1} · t^{j+1} = t^{i+j+2} while the exponent stays <= k.
            let e = i + j + 2;
            if e <= k {
                m_mult[i][j][e - 1] = crate::rint(1);
            }
        }
    }
    let labels = (1..=k)
        .map(|i| if i == 1 { "t".into() } else { format!("t^{i}") })
        .collect();
    LocalAlgebraBase::new_unchecked(k, m_mult, Some(labels)).expect("shape is consistent")
}

/// The infinitesimal base `C_1 = K ⊕ H'` with `H'² = 0` and `dim H' = h_dim`.
pub fn c1_base(h_dim: usize) -> LocalAlgebraBase {
    let m_mult = vec![vec![vec![Rational::zero(); h_dim]; h_dim]; h_dim];
    let labels = (1..=h_dim).map(|i| format!("t{i}")).collect();
    LocalAlgebraBase::new_unchecked(h_dim, m_mult, Some(labels)).expect("shape is consistent")
}

fn ensure_valid_base(a: &LocalAlgebraBase) -> Result<()> {
    if !check_base_axioms(a) {
        return Err(Error::InvalidBase(
            "base fails the commutative/associative/nilpotent axioms".into(),
        ));
    }
    Ok(())
}

/// Reduced Harrison H¹ with trivial coefficients: the functionals on `m`
/// vanishing on `m²`, i.e. `(m/m²)'`. Returns `(dim, basis of functionals)`
/// with each functional a coordinate vector in the dual `m`-basis.
pub fn harrison_h1(a: &LocalAlgebraBase) -> Result<(usize, Vec<Vec<Rational>>)> {
    ensure_valid_base(a)?;
    let r = a.m_dim();
    // One row per basis product (i, j); the kernel is the annihilator of m².
    let mut sys = Matrix::zeros(r * r, r);
    for i in 0..r {
        for j in 0..r {
            for (k, c) in a.product_of_basis(i, j).iter().enumerate() {
                if !c.is_zero() {
                    sys.set(i * r + j, k, c.clone());
                }
            }
        }
    }
    let kernel = kernel_basis(&sys);
    let basis = kernel.basis().to_vec();
    Ok((basis.len(), basis))
}

/// A symmetric reduced Harrison 2-cochain on `m` with values in `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarrisonTwoCocycle {
    m_dim: usize,
    /// `f[i][j] = f(m_i, m_j)`; symmetric.
    f: Vec<Vec<Rational>>,
}

impl HarrisonTwoCocycle {
    pub fn new(m_dim: usize, f: Vec<Vec<Rational>>) -> Result<Self> {
        if f.len() != m_dim || f.iter().any(|row| row.len() != m_dim) {
            return Err(Error::ShapeMismatch(format!(
                "cocycle table must be {m_dim}x{m_dim}"
            )));
        }
        for i in 0..m_dim {
            for j in 0..i {
                if f[i][j] != f[j][i] {
                    return Err(Error::InvalidCocycle(
                        "Harrison 2-cochains must be symmetric".into(),
                    ));
                }
            }
        }
        Ok(HarrisonTwoCocycle { m_dim, f })
    }

    pub fn zero(m_dim: usize) -> Self {
        HarrisonTwoCocycle {
            m_dim,
            f: vec![vec![Rational::zero(); m_dim]; m_dim],
        }
    }

    pub fn m_dim(&self) -> usize {
        self.m_dim
    }

    pub fn value(&self, i: usize, j: usize) -> &Rational {
        &self.f[i][j]
    }

    /// Bilinear evaluation on coefficient vectors in `m`.
    pub fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if !yj.is_zero() && !self.f[i][j].is_zero() {
                    acc += xi * yj * &self.f[i][j];
                }
            }
        }
        acc
    }

    /// Flat row-major coordinates (length `m_dim²`).
    pub fn to_flat(&self) -> Vec<Rational> {
        self.f.iter().flatten().cloned().collect()
    }

    pub fn from_flat(m_dim: usize, flat: &[Rational]) -> Result<Self> {
        if flat.len() != m_dim * m_dim {
            return Err(Error::ShapeMismatch(format!(
                "expected {} coordinates, got {}",
                m_dim * m_dim,
                flat.len()
            )));
        }
        let f = (0..m_dim)
            .map(|i| flat[i * m_dim..(i + 1) * m_dim].to_vec())
            .collect();
        Self::new(m_dim, f)
    }

    /// The reduced cocycle condition `f(m_i·m_j, m_k) = f(m_i, m_j·m_k)`.
    pub fn is_cocycle(&self, a: &LocalAlgebraBase) -> bool {
        let r = a.m_dim();
        if r != self.m_dim {
            return false;
        }
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    let left = self.eval(a.product_of_basis(i, j), &a.basis_vector(k));
                    let right = self.eval(&a.basis_vector(i), a.product_of_basis(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Harrison degree-2 data: cocycles, coboundaries, and class representatives,
/// all in flat row-major `m_dim²` coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct HarrisonTwoReport {
    pub m_dim: usize,
    pub z: Subspace<Rational>,
    pub b: Subspace<Rational>,
    pub h_reps: Vec<HarrisonTwoCocycle>,
}

impl HarrisonTwoReport {
    pub fn h_dim(&self) -> usize {
        self.h_reps.len()
    }
}

/// Reduced Harrison H² with trivial coefficients.
///
/// Z = symmetric `f` with `f(xy, z) = f(x, yz)`; B = image of
/// `g ↦ ((x, y) ↦ -g(xy))`; representatives come from the canonical
/// complement of B in Z.
pub fn harrison_h2(a: &LocalAlgebraBase) -> Result<HarrisonTwoReport> {
    ensure_valid_base(a)?;
    let r = a.m_dim();
    let ambient = r * r;
    // Rows: symmetry constraints for i < j, then the cocycle conditions.
    let mut rows = Vec::new();
    for i in 0..r {
        for j in 0..i {
            let mut row = vec![Rational::zero(); ambient];
            row[i * r + j] = crate::rint(1);
            row[j * r + i] = crate::rint(-1);
            rows.push(row);
        }
    }
    for i in 0..r {
        for j in 0..r {
            for k in 0..r {
                let mut row = vec![Rational::zero(); ambient];
                // f(m_i·m_j, m_k) - f(m_i, m_j·m_k) = 0.
                for (s, c) in a.product_of_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        row[s * r + k] += c;
                    }
                }
                for (s, c) in a.product_of_basis(j, k).iter().enumerate() {
                    if !c.is_zero() {
                        row[i * r + s] -= c;
                    }
                }
                if !row.iter().all(Zero::is_zero) {
                    rows.push(row);
                }
            }
        }
    }
    let sys = if rows.is_empty() {
        Matrix::zeros(1, ambient)
    } else {
        Matrix::from_rows(rows)?
    };
    let z = kernel_basis(&sys);

    let mut b_rows = Vec::new();
    for s in 0..r {
        let mut row = vec![Rational::zero(); ambient];
        for i in 0..r {
            for j in 0..r {
                let c = &a.product_of_basis(i, j)[s];
                if !c.is_zero() {
                    row[i * r + j] = -c.clone();
                }
            }
        }
        if !row.iter().all(Zero::is_zero) {
            b_rows.push(row);
        }
    }
    let b = Subspace::from_spanning(ambient, b_rows);

    if !z.contains_subspace(&b) {
        return Err(Error::InvalidBase(
            "Harrison coboundaries escaped the cocycle space; table is inconsistent".into(),
        ));
    }
    let h = quotient_complement(&z, &b)?;
    let h_reps = h
        .basis()
        .iter()
        .map(|v| HarrisonTwoCocycle::from_flat(r, v))
        .collect::<Result<Vec<_>>>()?;
    Ok(HarrisonTwoReport { m_dim: r, z, b, h_reps })
}

/// A unital augmentation-preserving algebra map between bases, stored by its
/// restriction `m_source → m_target`.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseMorphism {
    source: LocalAlgebraBase,
    target: LocalAlgebraBase,
    /// `matrix` is `target.m_dim × source.m_dim`.
    matrix: Matrix<Rational>,
}

impl BaseMorphism {
    /// Builds a morphism and verifies multiplicativity on the `m`-tables.
    pub fn new(
        source: LocalAlgebraBase,
        target: LocalAlgebraBase,
        matrix: Matrix<Rational>,
    ) -> Result<Self> {
        if matrix.rows() != target.m_dim() || matrix.cols() != source.m_dim() {
            return Err(Error::ShapeMismatch(format!(
                "morphism matrix must be {}x{}, got {}x{}",
                target.m_dim(),
                source.m_dim(),
                matrix.rows(),
                matrix.cols()
            )));
        }
        let phi = BaseMorphism {
            source,
            target,
            matrix,
        };
        for i in 0..phi.source.m_dim() {
            for j in 0..phi.source.m_dim() {
                let lhs = phi.apply(phi.source.product_of_basis(i, j));
                let rhs = phi.target.multiply(
                    &phi.apply(&phi.source.basis_vector(i)),
                    &phi.apply(&phi.source.basis_vector(j)),
                );
                if lhs != rhs {
                    return Err(Error::InvalidBase(format!(
                        "base morphism is not multiplicative at (m{}, m{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(phi)
    }

    pub fn identity(base: &LocalAlgebraBase) -> Self {
        BaseMorphism {
            source: base.clone(),
            target: base.clone(),
            matrix: Matrix::identity(base.m_dim()),
        }
    }

    pub fn zero(source: &LocalAlgebraBase, target: &LocalAlgebraBase) -> Result<Self> {
        BaseMorphism::new(
            source.clone(),
            target.clone(),
            Matrix::zeros(target.m_dim(), source.m_dim()),
        )
    }

    pub fn source(&self) -> &LocalAlgebraBase {
        &self.source
    }

    pub fn target(&self) -> &LocalAlgebraBase {
        &self.target
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.matrix
    }

    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        self.matrix.mat_vec(x).expect("shape checked at build")
    }

    /// `after ∘ self`, defined when `self.target == after.source`.
    pub fn compose(&self, after: &BaseMorphism) -> Result<BaseMorphism> {
        if self.target != after.source {
            return Err(Error::IncompatibleBases(
                "composition requires matching intermediate base".into(),
            ));
        }
        BaseMorphism::new(
            self.source.clone(),
            after.target.clone(),
            after.matrix.mul(&self.matrix)?,
        )
    }
}

/// The result of a 1-dimensional base extension `0 → K → B → A → 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct BaseExtension {
    /// `B`, with `m_B` basis = lifted `m_A` basis followed by the new element.
    pub extended: LocalAlgebraBase,
    /// Image of `1 ∈ K` in `m_B` coordinates (the new basis element).
    pub inclusion: Vec<Rational>,
    /// The projection `B → A` dropping the new element.
    pub projection: BaseMorphism,
}

/// Extends `a` by one dimension along a Harrison 2-cocycle:
/// `n_i · n_j = lift(m_i · m_j) + f(m_i, m_j) · n_{r+1}` and
/// `n_{r+1} · m_B = 0`. Fails with `InvalidCocycle` when the resulting table
/// is not associative (which detects non-cocycle inputs).
pub fn extend_by_cocycle(a: &LocalAlgebraBase, f: &HarrisonTwoCocycle) -> Result<BaseExtension> {
    ensure_valid_base(a)?;
    if f.m_dim() != a.m_dim() {
        return Err(Error::ShapeMismatch(format!(
            "cocycle is over m of dimension {}, base has {}",
            f.m_dim(),
            a.m_dim()
        )));
    }
    let r = a.m_dim();
    let rb = r + 1;
    let mut m_mult = vec![vec![vec![Rational::zero(); rb]; rb]; rb];
    for i in 0..r {
        for j in 0..r {
            for (k, c) in a.product_of_basis(i, j).iter().enumerate() {
                m_mult[i][j][k] = c.clone();
            }
            m_mult[i][j][r] = f.value(i, j).clone();
        }
    }
    let mut labels: Vec<String> = a.labels().to_vec();
    labels.push(format!("n{rb}"));
    let extended = LocalAlgebraBase::new_unchecked(rb, m_mult, Some(labels))?;
    if !extended.is_associative() {
        return Err(Error::InvalidCocycle(
            "extension table is not associative; the input is not a Harrison 2-cocycle".into(),
        ));
    }
    debug_assert!(check_base_axioms(&extended));

    let mut inclusion = vec![Rational::zero(); rb];
    inclusion[r] = crate::rint(1);

    let mut proj = Matrix::zeros(r, rb);
    for i in 0..r {
        proj.set(i, i, crate::rint(1));
    }
    let projection = BaseMorphism::new(extended.clone(), a.clone(), proj)?;

    Ok(BaseExtension {
        extended,
        inclusion,
        projection,
    })
}

/// Checks that the basis change `t` transports `source`'s table onto
/// `target`'s: `t(x ·_source y) = t(x) ·_target t(y)` on basis pairs, with
/// `t` invertible. Used to certify explicit isomorphisms of extensions.
pub fn is_base_isomorphism(
    source: &LocalAlgebraBase,
    target: &LocalAlgebraBase,
    t: &Matrix<Rational>,
) -> bool {
    let r = source.m_dim();
    if target.m_dim() != r || t.rows() != r || t.cols() != r {
        return false;
    }
    let (_, rank) = crate::exactla::rref(t);
    if rank != r {
        return false;
    }
    for i in 0..r {
        for j in 0..r {
            let lhs = t.mat_vec(source.product_of_basis(i, j)).expect("square");
            let ti = t.mat_vec(&source.basis_vector(i)).expect("square");
            let tj = t.mat_vec(&source.basis_vector(j)).expect("square");
            if lhs != target.multiply(&ti, &tj) {
                return false;
            }
        }
    }
    true
}
