//! Finitely generated abelian groups in invariant-factor form, and
//! homomorphisms between them.
//!
//! A group is stored canonically: a divisibility chain of invariant factors
//! d₁ | d₂ | … (each ≥ 2) followed by a free rank. Two isomorphic groups
//! always produce identical field values, so equality of computed groups is
//! plain structural equality. Elements are coordinate vectors of length
//! `torsion count + free rank`, torsion coordinates reduced mod dᵢ.
//!
//! Kernels, images and cokernels are all computed through one device: a
//! `Subquotient` S/R of lattices in the free cover of an ambient group.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::hnf::column_hermite;
use crate::matrix::IntMatrix;
use crate::snf::{self, SmithDecomposition};

/// A finitely generated abelian group ⊕ Z/dᵢ ⊕ Z^free_rank, canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FgAbGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl FgAbGroup {
    pub fn new(torsion: Vec<BigInt>, free_rank: usize) -> Result<Self> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < BigInt::from(2) {
                return Err(Error::InvalidInput(format!(
                    "invariant factor {} is < 2",
                    d
                )));
            }
            if i + 1 < torsion.len() && !torsion[i + 1].mod_floor(d).is_zero() {
                return Err(Error::InvalidInput(format!(
                    "invariant factors must form a divisibility chain: {} ∤ {}",
                    d,
                    torsion[i + 1]
                )));
            }
        }
        Ok(Self { torsion, free_rank })
    }

    pub fn trivial() -> Self {
        Self { torsion: vec![], free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        Self { torsion: vec![], free_rank: rank }
    }

    pub fn cyclic(d: u64) -> Self {
        assert!(d >= 2);
        Self { torsion: vec![BigInt::from(d)], free_rank: 0 }
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Length of element coordinate vectors.
    pub fn rank_len(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order; None when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().product()
    }

    pub fn zero_vec(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.rank_len()]
    }

    /// Canonical representative: torsion coordinates reduced into [0, dᵢ).
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.rank_len(), "element length mismatch");
        let mut out = v.to_vec();
        for (i, d) in self.torsion.iter().enumerate() {
            out[i] = out[i].mod_floor(d);
        }
        out
    }

    pub fn is_zero_elem(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Relation lattice of the canonical presentation: columns dᵢ·eᵢ.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.rank_len();
        let k = self.torsion.len();
        let mut m = IntMatrix::zeros(n, k);
        for (i, d) in self.torsion.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    /// All elements, in lexicographic coordinate order. Finite groups only.
    pub fn elements(&self) -> Result<Vec<Vec<BigInt>>> {
        if self.free_rank > 0 {
            return Err(Error::Precondition("group is infinite".into()));
        }
        let mut out = vec![vec![]];
        for d in &self.torsion {
            let mut next = Vec::new();
            for pre in &out {
                let mut c = BigInt::zero();
                while &c < d {
                    let mut v = pre.clone();
                    v.push(c.clone());
                    next.push(v);
                    c += 1;
                }
            }
            out = next;
        }
        Ok(out)
    }
}

/// Structure data for a quotient Z^n / column-span(A).
#[derive(Clone, Debug)]
pub struct CokernelData {
    pub group: FgAbGroup,
    /// rank_len × n; sends an ambient vector to its class coordinates
    /// (reduce afterwards).
    pub projection: IntMatrix,
    /// n × rank_len; integral lift of each canonical generator.
    pub gen_lifts: IntMatrix,
}

impl CokernelData {
    pub fn project(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.group.reduce(&self.projection.apply(v))
    }

    /// The projection as a homomorphism from the ambient free group.
    pub fn projection_hom(&self) -> AbHom {
        AbHom::new(
            FgAbGroup::free(self.projection.cols()),
            self.group.clone(),
            self.projection.clone(),
        )
        .expect("cokernel projection is always well defined")
    }
}

/// Canonical structure of Z^rows(A) / column-span(A).
pub fn cokernel_structure(a: &IntMatrix) -> CokernelData {
    let n = a.rows();
    // The Hermite form spans the same lattice with at most n columns,
    // which keeps the Smith computation small for wide relation matrices.
    let h = column_hermite(a);
    let dec = snf::smith_normal_form(&h);

    let mut torsion = Vec::new();
    let mut selected = Vec::new();
    for i in 0..dec.rank {
        let d = &dec.s[(i, i)];
        if *d >= BigInt::from(2) {
            torsion.push(d.clone());
            selected.push(i);
        }
    }
    for i in dec.rank..n {
        selected.push(i);
    }
    let free_rank = n - dec.rank;
    let group = FgAbGroup::new(torsion, free_rank).expect("SNF yields a divisibility chain");

    let mut projection = IntMatrix::zeros(selected.len(), n);
    for (t, &i) in selected.iter().enumerate() {
        for j in 0..n {
            projection[(t, j)] = dec.u[(i, j)].clone();
        }
    }
    let gen_lifts = dec.u_inv.select_columns(&selected);

    CokernelData { group, projection, gen_lifts }
}

/// A homomorphism between canonical groups. Column j of `matrix` is the
/// image of the j-th canonical generator of the domain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbHom {
    domain: FgAbGroup,
    codomain: FgAbGroup,
    matrix: IntMatrix,
}

impl AbHom {
    pub fn new(domain: FgAbGroup, codomain: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.rank_len() || matrix.cols() != domain.rank_len() {
            return Err(Error::Dimension(format!(
                "hom matrix is {}×{}, expected {}×{}",
                matrix.rows(),
                matrix.cols(),
                codomain.rank_len(),
                domain.rank_len()
            )));
        }
        // Well-definedness: a torsion generator of order d must map to an
        // element killed by d.
        for (j, d) in domain.torsion().iter().enumerate() {
            let col = matrix.column(j);
            let scaled: Vec<BigInt> = col.iter().map(|x| x * d).collect();
            if !codomain.is_zero_elem(&scaled) {
                return Err(Error::IllFormedHom(format!(
                    "generator {} of order {} maps to an element not killed by {}",
                    j, d, d
                )));
            }
        }
        // Store the canonical reduced matrix so hom equality is structural.
        let mut reduced = matrix;
        for j in 0..reduced.cols() {
            let col = codomain.reduce(&reduced.column(j));
            for i in 0..reduced.rows() {
                reduced[(i, j)] = col[i].clone();
            }
        }
        Ok(Self { domain, codomain, matrix: reduced })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        Self::new(g.clone(), g.clone(), IntMatrix::identity(g.rank_len()))
            .expect("identity is well defined")
    }

    pub fn zero(domain: &FgAbGroup, codomain: &FgAbGroup) -> Self {
        Self::new(
            domain.clone(),
            codomain.clone(),
            IntMatrix::zeros(codomain.rank_len(), domain.rank_len()),
        )
        .expect("zero map is well defined")
    }

    /// Multiplication by an integer scalar.
    pub fn scalar(g: &FgAbGroup, c: i64) -> Self {
        Self::new(
            g.clone(),
            g.clone(),
            IntMatrix::identity(g.rank_len()).scale(&BigInt::from(c)),
        )
        .expect("scalar maps are well defined")
    }

    pub fn domain(&self) -> &FgAbGroup {
        &self.domain
    }

    pub fn codomain(&self) -> &FgAbGroup {
        &self.codomain
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.codomain.reduce(&self.matrix.apply(v))
    }

    /// self ∘ other.
    pub fn compose(&self, other: &AbHom) -> Result<AbHom> {
        if other.codomain != self.domain {
            return Err(Error::Dimension("composition domains do not match".into()));
        }
        AbHom::new(
            other.domain.clone(),
            self.codomain.clone(),
            self.matrix.mul(&other.matrix),
        )
    }

    pub fn add(&self, other: &AbHom) -> Result<AbHom> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Dimension("hom sum shape mismatch".into()));
        }
        AbHom::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.add(&other.matrix),
        )
    }

    pub fn sub(&self, other: &AbHom) -> Result<AbHom> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(Error::Dimension("hom difference shape mismatch".into()));
        }
        AbHom::new(
            self.domain.clone(),
            self.codomain.clone(),
            self.matrix.sub(&other.matrix),
        )
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.matrix.cols()).all(|j| self.codomain.is_zero_elem(&self.matrix.column(j)))
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.codomain && *self == AbHom::identity(&self.domain)
    }

    /// Iterated composition self^k, k ≥ 0.
    pub fn pow(&self, k: usize) -> Result<AbHom> {
        assert_eq!(self.domain, self.codomain, "pow needs an endomorphism");
        let mut acc = AbHom::identity(&self.domain);
        for _ in 0..k {
            acc = self.compose(&acc)?;
        }
        Ok(acc)
    }
}

/// A subquotient S/R where L ⊆ R ⊆ S ⊆ Z^n are lattices over the free
/// cover of an ambient canonical group with relation lattice L.
#[derive(Clone, Debug)]
pub struct Subquotient {
    ambient: FgAbGroup,
    /// Lattice basis of S, as columns in the free cover.
    basis: IntMatrix,
    basis_dec: SmithDecomposition,
    data: CokernelData,
}

impl Subquotient {
    /// S is spanned by `sub_gens` together with the ambient relations;
    /// R by `rel_gens` together with the ambient relations. Errors when a
    /// relation generator falls outside S.
    pub fn new(ambient: &FgAbGroup, sub_gens: &IntMatrix, rel_gens: &IntMatrix) -> Result<Self> {
        let n = ambient.rank_len();
        assert_eq!(sub_gens.rows(), n, "subgroup generator length mismatch");
        assert_eq!(rel_gens.rows(), n, "relation generator length mismatch");
        let relations = ambient.relation_matrix();
        let basis = column_hermite(&sub_gens.hstack(&relations));
        let basis_dec = snf::smith_normal_form(&basis);

        let rel_full = rel_gens.hstack(&relations);
        let mut rel_cols = Vec::with_capacity(rel_full.cols());
        for j in 0..rel_full.cols() {
            let col = rel_full.column(j);
            let w = snf::solve(&basis_dec, &col).ok_or_else(|| {
                Error::NotInSubgroup(format!("relation generator {} is outside the subgroup", j))
            })?;
            rel_cols.push(w);
        }
        let rel_in_basis = IntMatrix::from_columns(basis.cols(), &rel_cols);
        let data = cokernel_structure(&rel_in_basis);

        Ok(Self {
            ambient: ambient.clone(),
            basis,
            basis_dec,
            data,
        })
    }

    /// The subgroup S/L of the ambient group, with no extra relations.
    pub fn subgroup(ambient: &FgAbGroup, sub_gens: &IntMatrix) -> Result<Self> {
        Self::new(ambient, sub_gens, &IntMatrix::zeros(ambient.rank_len(), 0))
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.data.group
    }

    pub fn ambient(&self) -> &FgAbGroup {
        &self.ambient
    }

    /// Coordinates in S/R of an ambient element that lies in S.
    pub fn classify(&self, v: &[BigInt]) -> Result<Vec<BigInt>> {
        let w = snf::solve(&self.basis_dec, v)
            .ok_or_else(|| Error::NotInSubgroup("element is outside the subgroup".into()))?;
        Ok(self.data.project(&w))
    }

    /// An ambient representative of an S/R class.
    pub fn rep(&self, q: &[BigInt]) -> Vec<BigInt> {
        let lifted = self.data.gen_lifts.apply(q);
        self.ambient.reduce(&self.basis.apply(&lifted))
    }

    /// The map S/R → ambient induced by S ⊆ Z^n. Injective when R = L.
    pub fn incl_hom(&self) -> AbHom {
        let g = self.group().clone();
        let cols: Vec<Vec<BigInt>> = (0..g.rank_len())
            .map(|t| {
                let mut e = vec![BigInt::zero(); g.rank_len()];
                e[t] = BigInt::one();
                self.rep(&e)
            })
            .collect();
        AbHom::new(
            g,
            self.ambient.clone(),
            IntMatrix::from_columns(self.ambient.rank_len(), &cols),
        )
        .expect("subgroup inclusion is well defined")
    }
}

/// Kernel of a homomorphism, as an abstract group with its inclusion.
pub fn hom_kernel(f: &AbHom) -> (FgAbGroup, AbHom) {
    let m = f.domain().rank_len();
    let combined = f.matrix().hstack(&f.codomain().relation_matrix());
    let dec = snf::smith_normal_form(&combined);
    let kernel_cols = snf::kernel_basis(&dec);
    let preimage = kernel_cols.select_rows(&(0..m).collect::<Vec<_>>());
    let sq = Subquotient::subgroup(f.domain(), &preimage)
        .expect("kernel lattice lies inside the domain cover");
    (sq.group().clone(), sq.incl_hom())
}

/// Image subgroup with its inclusion into the codomain.
pub fn hom_image(f: &AbHom) -> (FgAbGroup, AbHom) {
    let sq = Subquotient::subgroup(f.codomain(), f.matrix())
        .expect("image lattice lies inside the codomain cover");
    (sq.group().clone(), sq.incl_hom())
}

/// Cokernel with its projection from the codomain.
pub fn hom_cokernel(f: &AbHom) -> (FgAbGroup, AbHom) {
    let n = f.codomain().rank_len();
    let sq = Subquotient::new(f.codomain(), &IntMatrix::identity(n), f.matrix())
        .expect("image relations lie inside the full codomain");
    let cols: Vec<Vec<BigInt>> = (0..n)
        .map(|j| {
            let mut e = vec![BigInt::zero(); n];
            e[j] = BigInt::one();
            sq.classify(&e).expect("codomain elements always classify")
        })
        .collect();
    let proj = AbHom::new(
        f.codomain().clone(),
        sq.group().clone(),
        IntMatrix::from_columns(sq.group().rank_len(), &cols),
    )
    .expect("cokernel projection is well defined");
    (sq.group().clone(), proj)
}

/// Do two homomorphisms into the same group have identical images?
pub fn subgroup_equal(incl1: &AbHom, incl2: &AbHom) -> Result<bool> {
    if incl1.codomain() != incl2.codomain() {
        return Err(Error::CodomainMismatch);
    }
    let relations = incl1.codomain().relation_matrix();
    let l1 = column_hermite(&incl1.matrix().hstack(&relations));
    let l2 = column_hermite(&incl2.matrix().hstack(&relations));
    Ok(l1 == l2)
}

/// The map between subquotients induced by an ambient homomorphism.
/// Fails when the image of a representative does not land in the target
/// subgroup.
pub fn induced_hom(src: &Subquotient, dst: &Subquotient, ambient_map: &AbHom) -> Result<AbHom> {
    assert_eq!(src.ambient(), ambient_map.domain(), "source ambient mismatch");
    assert_eq!(dst.ambient(), ambient_map.codomain(), "target ambient mismatch");
    let g = src.group().clone();
    let mut cols = Vec::with_capacity(g.rank_len());
    for t in 0..g.rank_len() {
        let mut e = vec![BigInt::zero(); g.rank_len()];
        e[t] = BigInt::one();
        let y = ambient_map.apply(&src.rep(&e));
        cols.push(dst.classify(&y)?);
    }
    AbHom::new(
        g,
        dst.group().clone(),
        IntMatrix::from_columns(dst.group().rank_len(), &cols),
    )
}
