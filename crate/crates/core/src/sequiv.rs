//! Rational S-equivalence: moves, traces, reduction to a nonsingular
//! representative and invariants of the class.

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::io::{matrix_from_json, matrix_to_json, vec_from_json, vec_to_json, JsonRat};
use crate::linalg::RatMatrix;
use crate::ring::scalar::{squarefree_class, CoeffRing, Int, Rat};
use crate::ring::similarity::SimilarityClass;
use crate::seifert::{alexander_class, derive_r, intersection_matrix, require_valid, Parity, SeifertData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `θ ↦ P' θ P`
    Congruence { p: RatMatrix, ring: CoeffRing },
    /// `θ ↦ [[0, 0, 0], [1, x, u], [0, v, θ]]`
    RowEnlarge { x: Rat, u: Vec<Rat>, v: Vec<Rat> },
    /// `θ ↦ [[0, 1, 0], [0, x, u], [0, v, θ]]`
    ColEnlarge { x: Rat, u: Vec<Rat>, v: Vec<Rat> },
    RowReduce,
    ColReduce,
    /// `θ ↦ [[θ, 0, η], [0, 0, x], [ξ, x', y]]` with exactly one of `x`, `x'` zero.
    SurgeryEnlarge { eta: Vec<Rat>, xi: Vec<Rat>, x: Rat, x_prime: Rat, y: Rat },
}

impl Move {
    pub fn name(&self) -> &'static str {
        match self {
            Move::Congruence { .. } => "congruence",
            Move::RowEnlarge { .. } => "row_enlarge",
            Move::ColEnlarge { .. } => "col_enlarge",
            Move::RowReduce => "row_reduce",
            Move::ColReduce => "col_reduce",
            Move::SurgeryEnlarge { .. } => "surgery_enlarge",
        }
    }
}

fn check_len(v: &[Rat], k: usize, what: &str) -> Result<()> {
    if v.len() != k {
        return Err(Error::ShapeMismatch(format!("{what} has length {}, expected {k}", v.len())));
    }
    Ok(())
}

/// Matrix `[[a, b, 0], [c, x, u], [0, v, θ]]` with the given corner.
fn enlarge(theta: &RatMatrix, corner: [i64; 3], x: &Rat, u: &[Rat], v: &[Rat]) -> RatMatrix {
    let k = theta.rows();
    let [a, b, c] = corner.map(|e| Rat::from_integer(Int::from(e)));
    RatMatrix::from_fn(k + 2, k + 2, |i, j| match (i, j) {
        (0, 0) => a.clone(),
        (0, 1) => b.clone(),
        (1, 0) => c.clone(),
        (1, 1) => x.clone(),
        (1, j) => u[j - 2].clone(),
        (i, 1) if i >= 2 => v[i - 2].clone(),
        (i, j) if i >= 2 && j >= 2 => theta.get(i - 2, j - 2).clone(),
        _ => Rat::zero(),
    })
}

fn tail(theta: &RatMatrix) -> RatMatrix {
    let idx: Vec<usize> = (2..theta.rows()).collect();
    theta.submatrix(&idx, &idx)
}

pub fn apply_move(s: &SeifertData, m: &Move) -> Result<SeifertData> {
    let k = s.dim();
    let th = &s.theta;
    let theta = match m {
        Move::Congruence { p, ring } => {
            if p.rows() != k || p.cols() != k {
                return Err(Error::ShapeMismatch(format!("P is {}x{}, theta is {k}x{k}", p.rows(), p.cols())));
            }
            let d = p.det();
            match ring {
                CoeffRing::Rat if d.is_zero() => return Err(Error::IllegalMove("singular congruence".into())),
                CoeffRing::Int if !p.is_integral() || !d.abs().is_one() => {
                    return Err(Error::IllegalMove("integral congruence must be unimodular".into()))
                }
                _ => {}
            }
            th.congruence(p)
        }
        Move::RowEnlarge { x, u, v } => {
            check_len(u, k, "u")?;
            check_len(v, k, "v")?;
            enlarge(th, [0, 0, 1], x, u, v)
        }
        Move::ColEnlarge { x, u, v } => {
            check_len(u, k, "u")?;
            check_len(v, k, "v")?;
            enlarge(th, [0, 1, 0], x, u, v)
        }
        Move::RowReduce => {
            if k < 2
                || !(0..k).all(|j| th.get(0, j).is_zero())
                || !th.get(1, 0).is_one()
                || !(2..k).all(|i| th.get(i, 0).is_zero())
            {
                return Err(Error::ShapeMismatch("not a row enlargement".into()));
            }
            tail(th)
        }
        Move::ColReduce => {
            if k < 2
                || !(0..k).all(|i| th.get(i, 0).is_zero())
                || !th.get(0, 1).is_one()
                || !(2..k).all(|j| th.get(0, j).is_zero())
            {
                return Err(Error::ShapeMismatch("not a column enlargement".into()));
            }
            tail(th)
        }
        Move::SurgeryEnlarge { eta, xi, x, x_prime, y } => {
            check_len(eta, k, "eta")?;
            check_len(xi, k, "xi")?;
            if x.is_zero() == x_prime.is_zero() {
                return Err(Error::IllegalMove("exactly one of x, x' must be zero".into()));
            }
            RatMatrix::from_fn(k + 2, k + 2, |i, j| match (i, j) {
                (i, j) if i < k && j < k => th.get(i, j).clone(),
                (i, j) if i < k && j == k + 1 => eta[i].clone(),
                (i, j) if i == k + 1 && j < k => xi[j].clone(),
                (i, j) if i == k && j == k + 1 => x.clone(),
                (i, j) if i == k + 1 && j == k => x_prime.clone(),
                (i, j) if i == k + 1 && j == k + 1 => y.clone(),
                _ => Rat::zero(),
            })
        }
    };
    Ok(SeifertData { theta, parity: s.parity })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MoveTraceRecord", into = "MoveTraceRecord")]
pub struct MoveTrace {
    pub start: SeifertData,
    pub moves: Vec<Move>,
    pub end: SeifertData,
}

impl MoveTrace {
    pub fn identity(s: &SeifertData) -> Self {
        MoveTrace { start: s.clone(), moves: Vec::new(), end: s.clone() }
    }

    /// Applies a move and records it.
    pub fn push(&mut self, m: Move) -> Result<()> {
        self.end = apply_move(&self.end, &m)?;
        self.moves.push(m);
        Ok(())
    }
}

/// Replays a trace and checks that it ends where it claims to.
pub fn replay(trace: &MoveTrace) -> Result<SeifertData> {
    let mut cur = trace.start.clone();
    for m in &trace.moves {
        cur = apply_move(&cur, m)?;
    }
    if cur != trace.end {
        return Err(Error::ShapeMismatch("replayed trace does not reach the recorded end".into()));
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    Nonsingular { result: SeifertData, trace: MoveTrace },
    ZeroModule { trace: MoveTrace },
}

impl Reduction {
    pub fn trace(&self) -> &MoveTrace {
        match self {
            Reduction::Nonsingular { trace, .. } | Reduction::ZeroModule { trace } => trace,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Reduction::Nonsingular { result, .. } => result.dim(),
            Reduction::ZeroModule { .. } => 0,
        }
    }
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

fn form(theta: &RatMatrix, x: &[Rat], y: &[Rat]) -> Rat {
    dot(x, &theta.mul_vec(y))
}

fn axpy(y: &mut [Rat], c: &Rat, x: &[Rat]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += c * xi;
    }
}

/// Congruence bringing a singular `θ` to the row-enlargement shape.
fn reduction_basis(theta: &RatMatrix) -> Result<RatMatrix> {
    let g = theta.rows();
    let a = theta
        .transpose()
        .kernel()
        .into_iter()
        .next()
        .ok_or_else(|| Error::InvalidCandidate("no kernel vector".into()))?;
    let ta = theta.mul_vec(&a);
    let j = (0..g).find(|&j| !ta[j].is_zero()).ok_or(Error::DegenerateR)?;
    // b' θ a = 1
    let mut b = vec![Rat::zero(); g];
    b[j] = Rat::one() / &ta[j];
    let bb = -form(theta, &b, &b);
    axpy(&mut b, &bb, &a);
    let mut basis = vec![a.clone(), b.clone()];
    for e in 0..g {
        let mut p = vec![Rat::zero(); g];
        p[e] = Rat::one();
        let trial = RatMatrix::from_rows(basis.iter().cloned().chain(std::iter::once(p.clone())).collect());
        if trial.rank() < basis.len() + 1 {
            continue;
        }
        let c = -form(theta, &p, &a);
        axpy(&mut p, &c, &b);
        let c = -form(theta, &b, &p);
        axpy(&mut p, &c, &a);
        basis.push(p);
        if basis.len() == g {
            break;
        }
    }
    Ok(RatMatrix::from_rows(basis).transpose())
}

/// Strips two dimensions at a time while `θ` is singular.
pub fn reduce_to_nonsingular(s: &SeifertData) -> Result<Reduction> {
    require_valid(s)?;
    let mut trace = MoveTrace::identity(s);
    while trace.end.dim() > 0 && trace.end.theta.det().is_zero() {
        let p = reduction_basis(&trace.end.theta)?;
        trace.push(Move::Congruence { p, ring: CoeffRing::Rat })?;
        trace.push(Move::RowReduce)?;
    }
    if trace.end.dim() == 0 {
        Ok(Reduction::ZeroModule { trace })
    } else {
        Ok(Reduction::Nonsingular { result: trace.end.clone(), trace })
    }
}

/// `(θ' - (-1)^(n+1) θ)⁻¹`
pub fn scalar_form(s: &SeifertData) -> Result<RatMatrix> {
    s.theta.transpose().sub(&s.theta.scale(&s.eps())).inverse().ok_or(Error::DegenerateForm)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SequivInvariants {
    pub alexander: SimilarityClass,
    pub dim_of_nonsingular_rep: usize,
    pub signature: Option<i64>,
    /// Squarefree representative of the determinant class modulo squares.
    pub det_class: Int,
}

/// Invariants of the rational S-equivalence class; defined whenever
/// `det R ≠ 0`, so they apply to every matrix reached by moves.
pub fn sequiv_invariants(s: &SeifertData) -> Result<SequivInvariants> {
    if derive_r(s).det().is_zero() {
        return Err(Error::InvalidCandidate("R degenerate".into()));
    }
    let alexander = alexander_class(s)?;
    // the numerator degree of the Alexander class equals the nonsingular dimension
    let dim_of_nonsingular_rep = alexander.rep.span() as usize;
    let signature = match s.parity {
        Parity::Even => Some(s.theta.add(&s.theta.transpose()).signature()),
        Parity::Odd => None,
    };
    let d = s.dim() as i64;
    let mut det_t = intersection_matrix(s).det();
    if s.parity == Parity::Even && (d * (d - 1) / 2) % 2 == 1 {
        det_t = -det_t;
    }
    Ok(SequivInvariants { alexander, dim_of_nonsingular_rep, signature, det_class: squarefree_class(&det_t) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum MoveRecord {
    Congruence { p: Vec<Vec<JsonRat>>, ring: CoeffRing },
    RowEnlarge { x: JsonRat, u: Vec<JsonRat>, v: Vec<JsonRat> },
    ColEnlarge { x: JsonRat, u: Vec<JsonRat>, v: Vec<JsonRat> },
    RowReduce,
    ColReduce,
    SurgeryEnlarge { eta: Vec<JsonRat>, xi: Vec<JsonRat>, x: JsonRat, x_prime: JsonRat, y: JsonRat },
}

impl From<&Move> for MoveRecord {
    fn from(m: &Move) -> Self {
        match m {
            Move::Congruence { p, ring } => MoveRecord::Congruence { p: matrix_to_json(p), ring: *ring },
            Move::RowEnlarge { x, u, v } => {
                MoveRecord::RowEnlarge { x: JsonRat(x.clone()), u: vec_to_json(u), v: vec_to_json(v) }
            }
            Move::ColEnlarge { x, u, v } => {
                MoveRecord::ColEnlarge { x: JsonRat(x.clone()), u: vec_to_json(u), v: vec_to_json(v) }
            }
            Move::RowReduce => MoveRecord::RowReduce,
            Move::ColReduce => MoveRecord::ColReduce,
            Move::SurgeryEnlarge { eta, xi, x, x_prime, y } => MoveRecord::SurgeryEnlarge {
                eta: vec_to_json(eta),
                xi: vec_to_json(xi),
                x: JsonRat(x.clone()),
                x_prime: JsonRat(x_prime.clone()),
                y: JsonRat(y.clone()),
            },
        }
    }
}

impl TryFrom<&MoveRecord> for Move {
    type Error = String;
    fn try_from(r: &MoveRecord) -> std::result::Result<Self, String> {
        Ok(match r {
            MoveRecord::Congruence { p, ring } => Move::Congruence { p: matrix_from_json(p)?, ring: *ring },
            MoveRecord::RowEnlarge { x, u, v } => {
                Move::RowEnlarge { x: x.0.clone(), u: vec_from_json(u), v: vec_from_json(v) }
            }
            MoveRecord::ColEnlarge { x, u, v } => {
                Move::ColEnlarge { x: x.0.clone(), u: vec_from_json(u), v: vec_from_json(v) }
            }
            MoveRecord::RowReduce => Move::RowReduce,
            MoveRecord::ColReduce => Move::ColReduce,
            MoveRecord::SurgeryEnlarge { eta, xi, x, x_prime, y } => Move::SurgeryEnlarge {
                eta: vec_from_json(eta),
                xi: vec_from_json(xi),
                x: x.0.clone(),
                x_prime: x_prime.0.clone(),
                y: y.0.clone(),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveTraceRecord {
    pub start: SeifertData,
    pub moves: Vec<MoveRecord>,
    pub end: SeifertData,
}

impl From<MoveTrace> for MoveTraceRecord {
    fn from(t: MoveTrace) -> Self {
        MoveTraceRecord { start: t.start, moves: t.moves.iter().map(MoveRecord::from).collect(), end: t.end }
    }
}

impl TryFrom<MoveTraceRecord> for MoveTrace {
    type Error = String;
    fn try_from(r: MoveTraceRecord) -> std::result::Result<Self, String> {
        let moves = r.moves.iter().map(Move::try_from).collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(MoveTrace { start: r.start, moves, end: r.end })
    }
}
