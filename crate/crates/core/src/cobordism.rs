//! Matrix cobordism: block sums, metabolic witnesses and obstructions.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{vec_from_json, vec_to_json, JsonRat};
use crate::linalg::RatMatrix;
use crate::ring::fox_milnor::fox_milnor_test;
use crate::ring::scalar::{is_perfect_square, Rat};
use crate::seifert::{alexander_numerator, require_valid, Parity, SeifertData};

/// Half-dimensional isotropic subspace, given by column vectors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "WitnessRecord", from = "WitnessRecord")]
pub struct CobordismWitness {
    pub basis: Vec<Vec<Rat>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub basis: Vec<Vec<JsonRat>>,
}

impl From<CobordismWitness> for WitnessRecord {
    fn from(w: CobordismWitness) -> Self {
        WitnessRecord { basis: w.basis.iter().map(|v| vec_to_json(v)).collect() }
    }
}

impl From<WitnessRecord> for CobordismWitness {
    fn from(w: WitnessRecord) -> Self {
        CobordismWitness { basis: w.basis.iter().map(|v| vec_from_json(v)).collect() }
    }
}

impl CobordismWitness {
    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Transports a witness for `A` to one for `P' A P`.
    pub fn transport(&self, p: &RatMatrix) -> Option<CobordismWitness> {
        let inv = p.inverse()?;
        Some(CobordismWitness { basis: self.basis.iter().map(|v| inv.mul_vec(v)).collect() })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub dim_even: bool,
    pub signature_zero: Option<bool>,
    pub fox_milnor: bool,
    pub det_at_minus_one_square: bool,
    /// `possibly_null_cobordant` or `obstructed`.
    pub verdict: String,
    pub reasons: Vec<String>,
}

pub const POSSIBLY_NULL: &str = "possibly_null_cobordant";
pub const OBSTRUCTED: &str = "obstructed";

impl ObstructionReport {
    pub fn is_obstructed(&self) -> bool {
        self.verdict == OBSTRUCTED
    }
}

pub fn block_sum(a: &SeifertData, b: &SeifertData) -> Result<SeifertData> {
    if a.parity != b.parity {
        return Err(Error::ParityMismatch);
    }
    Ok(SeifertData { theta: a.theta.block_diag(&b.theta), parity: a.parity })
}

pub fn negate(a: &SeifertData) -> SeifertData {
    SeifertData { theta: a.theta.neg(), parity: a.parity }
}

fn unit(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

fn bilinear(a: &RatMatrix, x: &[Rat], y: &[Rat]) -> Rat {
    a.mul_vec(y).iter().zip(x).fold(Rat::zero(), |acc, (ay, xi)| acc + ay * xi)
}

pub fn check_null_cobordance_witness(a: &RatMatrix, w: &CobordismWitness) -> Result<bool> {
    let n = a.rows();
    if !a.is_square() {
        return Err(Error::ShapeMismatch("form is not square".into()));
    }
    if let Some(v) = w.basis.iter().find(|v| v.len() != n) {
        return Err(Error::DimensionMismatch { expected: n, found: v.len() });
    }
    if 2 * w.len() != n {
        return Ok(false);
    }
    if w.is_empty() {
        return Ok(true);
    }
    let cols = RatMatrix::from_rows(w.basis.clone());
    if cols.rank() != w.len() {
        return Ok(false);
    }
    for x in &w.basis {
        for y in &w.basis {
            if !bilinear(a, x, y).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `{(e_i, e_i)}` for `A ⊞ -A`.
pub fn diagonal_witness(dim: usize) -> CobordismWitness {
    CobordismWitness {
        basis: (0..dim)
            .map(|i| {
                let mut v = vec![Rat::zero(); 2 * dim];
                v[i] = Rat::one();
                v[dim + i] = Rat::one();
                v
            })
            .collect(),
    }
}

pub fn obstruction_suite(a: &SeifertData) -> Result<ObstructionReport> {
    require_valid(a)?;
    let mut reasons = Vec::new();
    let dim_even = a.dim() % 2 == 0;
    if !dim_even {
        reasons.push("odd dimension".to_string());
    }
    let signature_zero = match a.parity {
        Parity::Even => {
            let sym = a.theta.add(&a.theta.transpose());
            let ok = sym.signature() == 0;
            if !ok {
                reasons.push("nonzero signature".to_string());
            }
            Some(ok)
        }
        Parity::Odd => None,
    };
    let num = alexander_numerator(a);
    let fox_milnor = fox_milnor_test(&num)?.passes;
    if !fox_milnor {
        reasons.push("fox-milnor condition fails".to_string());
    }
    let at_minus_one = num.eval(&-Rat::one());
    let det_at_minus_one_square =
        at_minus_one.is_integer() && is_perfect_square(&at_minus_one.to_integer().abs());
    if !det_at_minus_one_square {
        reasons.push(format!("|det at -1| = {} is not a square", crate::ring::rat_to_string(&at_minus_one.abs())));
    }
    let verdict = if reasons.is_empty() { POSSIBLY_NULL } else { OBSTRUCTED };
    Ok(ObstructionReport {
        dim_even,
        signature_zero,
        fox_milnor,
        det_at_minus_one_square,
        verdict: verdict.to_string(),
        reasons,
    })
}

pub fn cobordant_obstructions(a: &SeifertData, b: &SeifertData) -> Result<ObstructionReport> {
    if a.parity != b.parity {
        return Err(Error::ParityMismatch);
    }
    require_valid(a)?;
    require_valid(b)?;
    obstruction_suite(&block_sum(a, &negate(b))?)
}

/// Position of the isotropic new coordinate when `big` is an enlargement
/// of `small` in one of the three move shapes.
fn enlargement_shape(small: &RatMatrix, big: &RatMatrix) -> Option<(Vec<usize>, usize)> {
    let k = small.rows();
    if big.rows() != k + 2 || !big.is_square() {
        return None;
    }
    let zero = |i: usize, j: usize| big.get(i, j).is_zero();
    // surgery: [[θ, 0, η], [0, 0, x], [ξ, x', y]]
    let head: Vec<usize> = (0..k).collect();
    if big.submatrix(&head, &head) == *small && (0..=k).all(|i| zero(i, k) && zero(k, i)) {
        return Some((head, k));
    }
    // row / column enlargement: [[0,0,0],[1,x,u],[0,v,B]] and [[0,1,0],[0,x,u],[0,v,B]]
    let tail: Vec<usize> = (2..k + 2).collect();
    if big.submatrix(&tail, &tail) == *small {
        let row_zero = (0..k + 2).all(|j| zero(0, j)) && (2..k + 2).all(|i| zero(i, 0));
        let col_zero = (0..k + 2).all(|i| zero(i, 0)) && (2..k + 2).all(|j| zero(0, j));
        if row_zero || col_zero {
            return Some((tail, 0));
        }
    }
    None
}

/// Witness for `-M ⊞ M'` when `M'` enlarges `M`: the diagonal vectors on
/// the common block plus the isotropic new coordinate.
pub fn enlargement_cobordism_witness(m: &SeifertData, enlarged: &SeifertData) -> Result<CobordismWitness> {
    if m.parity != enlarged.parity {
        return Err(Error::ParityMismatch);
    }
    let (common, iso) = enlargement_shape(&m.theta, &enlarged.theta)
        .ok_or_else(|| Error::NotAnEnlargement("no enlargement pattern matches".into()))?;
    let k = m.dim();
    let n = 2 * k + 2;
    let mut basis: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            let mut v = unit(n, i);
            v[k + common[i]] = Rat::one();
            v
        })
        .collect();
    basis.push(unit(n, k + iso));
    Ok(CobordismWitness { basis })
}

/// The ambient form `-M ⊞ M'` for [`enlargement_cobordism_witness`].
pub fn enlargement_ambient(m: &SeifertData, enlarged: &SeifertData) -> RatMatrix {
    m.theta.neg().block_diag(&enlarged.theta)
}

/// The seven blocks `X1..X7` of the combination matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComboBlocks {
    pub x: [RatMatrix; 7],
}

/// `M = [[B0, 0, 0, X1], [0, -B1, 0, X2], [0, 0, 0, X3], [X4, X5, X6, X7]]`.
pub fn combo_matrix(b0: &RatMatrix, b1: &RatMatrix, blocks: &ComboBlocks) -> Result<RatMatrix> {
    let (r0, r1) = (b0.rows(), b1.rows());
    let s = blocks.x[6].rows();
    let expect = [(r0, s), (r1, s), (s, s), (s, r0), (s, r1), (s, s), (s, s)];
    for (i, (blk, want)) in blocks.x.iter().zip(expect).enumerate() {
        if (blk.rows(), blk.cols()) != want {
            return Err(Error::BlockShapeError(format!(
                "X{} is {}x{}, expected {}x{}",
                i + 1,
                blk.rows(),
                blk.cols(),
                want.0,
                want.1
            )));
        }
    }
    if !b0.is_square() || !b1.is_square() {
        return Err(Error::BlockShapeError("diagonal blocks must be square".into()));
    }
    let [x1, x2, x3, x4, x5, x6, x7] = &blocks.x;
    let z = RatMatrix::zeros;
    let top = b0.hstack(&z(r0, r1)).hstack(&z(r0, s)).hstack(x1);
    let second = z(r1, r0).hstack(&b1.neg()).hstack(&z(r1, s)).hstack(x2);
    let third = z(s, r0).hstack(&z(s, r1)).hstack(&z(s, s)).hstack(x3);
    let bottom = x4.hstack(x5).hstack(x6).hstack(x7);
    Ok(top.vstack(&second).vstack(&third).vstack(&bottom))
}

/// The ambient form `-B0 ⊞ B1 ⊞ M`.
pub fn combo_ambient(a0: &SeifertData, a1: &SeifertData, blocks: &ComboBlocks) -> Result<RatMatrix> {
    let m = combo_matrix(&a0.theta, &a1.theta, blocks)?;
    Ok(a0.theta.neg().block_diag(&a1.theta).block_diag(&m))
}

/// Witness of size `r + s` for `-B0 ⊞ B1 ⊞ M`.
pub fn combo_matrix_witness(a0: &SeifertData, a1: &SeifertData, blocks: &ComboBlocks) -> Result<CobordismWitness> {
    if a0.parity != a1.parity {
        return Err(Error::ParityMismatch);
    }
    combo_matrix(&a0.theta, &a1.theta, blocks)?;
    let r = a0.dim() + a1.dim();
    let s = blocks.x[6].rows();
    let n = 2 * (r + s);
    let mut basis: Vec<Vec<Rat>> = (0..r)
        .map(|i| {
            let mut v = unit(n, i);
            v[r + i] = Rat::one();
            v
        })
        .collect();
    basis.extend((0..s).map(|j| unit(n, 2 * r + j)));
    Ok(CobordismWitness { basis })
}
