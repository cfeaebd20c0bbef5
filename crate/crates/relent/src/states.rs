//! Constructors for the state families under study and their closed-form
//! reduced density matrices.
//!
//! Index convention: party A is the most significant qubit, so the basis
//! ket |abc⟩ lives at index 4a + 2b + c. All family parameters are real
//! and non-negative; complex phases on the amplitudes are locally
//! removable and never needed here.

use std::fmt;
use std::str::FromStr;

use crate::qlinalg::{partial_trace, CMatrix, DensityMatrix, C64};
use crate::{Error, Result};

/// Normalized amplitude vector over a tensor-product party structure.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    dims: Vec<usize>,
    amps: Vec<C64>,
}

impl PureState {
    pub fn new(dims: Vec<usize>, amps: Vec<C64>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if total != amps.len() {
            return Err(Error::DimensionMismatch(format!(
                "dims product {} vs amplitude count {}",
                total,
                amps.len()
            )));
        }
        let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > 1e-12 {
            return Err(Error::NotNormalized { norm_sqr });
        }
        Ok(PureState { dims, amps })
    }

    pub fn from_real(dims: Vec<usize>, amps: &[f64]) -> Result<Self> {
        Self::new(dims, amps.iter().map(|&x| C64::new(x, 0.0)).collect())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amps
    }

    /// The projector |ψ⟩⟨ψ| as a density matrix.
    pub fn density(&self) -> DensityMatrix {
        let mat = CMatrix::outer(&self.amps, &self.amps);
        DensityMatrix::new(self.dims.clone(), mat)
            .expect("projector of a normalized state is a valid density matrix")
    }

    /// Reduced state on the kept parties.
    pub fn reduced(&self, keep: &[usize]) -> Result<DensityMatrix> {
        partial_trace(&self.density(), keep)
    }
}

/// Two-party label for the reductions of a three-party state.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pair {
    AB,
    AC,
    BC,
}

impl Pair {
    pub fn keep(self) -> [usize; 2] {
        match self {
            Pair::AB => [0, 1],
            Pair::AC => [0, 2],
            Pair::BC => [1, 2],
        }
    }
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pair::AB => write!(f, "AB"),
            Pair::AC => write!(f, "AC"),
            Pair::BC => write!(f, "BC"),
        }
    }
}

impl FromStr for Pair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "AB" => Ok(Pair::AB),
            "AC" => Ok(Pair::AC),
            "BC" => Ok(Pair::BC),
            other => Err(Error::InvalidArgument(format!("unknown pair label {other:?}"))),
        }
    }
}

/// Parameters of the three-qubit family e|000⟩ + f|101⟩ + f|110⟩,
/// normalized as e² + 2f² = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WParams {
    e: f64,
    f: f64,
}

impl WParams {
    pub fn from_squares(e2: f64, f2: f64) -> Result<Self> {
        if e2 < 0.0 || f2 < 0.0 {
            return Err(Error::InvalidArgument("squared amplitudes must be non-negative".into()));
        }
        if (e2 + 2.0 * f2 - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "normalization e² + 2f² = 1 violated: {}",
                e2 + 2.0 * f2
            )));
        }
        Ok(WParams { e: e2.sqrt(), f: f2.sqrt() })
    }

    /// Fix f² and take e² = 1 − 2f².
    pub fn from_f2(f2: f64) -> Result<Self> {
        if !(0.0..=0.5).contains(&f2) {
            return Err(Error::InvalidArgument(format!("f² must lie in [0, 1/2], got {f2}")));
        }
        Self::from_squares(1.0 - 2.0 * f2, f2)
    }

    pub fn e(&self) -> f64 {
        self.e
    }

    pub fn f(&self) -> f64 {
        self.f
    }

    pub fn e2(&self) -> f64 {
        self.e * self.e
    }

    pub fn f2(&self) -> f64 {
        self.f * self.f
    }
}

/// Parameters of the three-qubit family
/// a|000⟩ + b|100⟩ + b|101⟩ + b|110⟩ + b|111⟩, normalized as a² + 4b² = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LambdaParams {
    a: f64,
    b: f64,
}

impl LambdaParams {
    pub fn from_squares(a2: f64, b2: f64) -> Result<Self> {
        if a2 < 0.0 || b2 < 0.0 {
            return Err(Error::InvalidArgument("squared amplitudes must be non-negative".into()));
        }
        if (a2 + 4.0 * b2 - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidArgument(format!(
                "normalization a² + 4b² = 1 violated: {}",
                a2 + 4.0 * b2
            )));
        }
        Ok(LambdaParams { a: a2.sqrt(), b: b2.sqrt() })
    }

    /// Fix a² and take b² = (1 − a²)/4.
    pub fn from_a2(a2: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&a2) {
            return Err(Error::InvalidArgument(format!("a² must lie in [0, 1], got {a2}")));
        }
        Self::from_squares(a2, (1.0 - a2) / 4.0)
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn a2(&self) -> f64 {
        self.a * self.a
    }

    pub fn b2(&self) -> f64 {
        self.b * self.b
    }
}

/// e|000⟩ + f|101⟩ + f|110⟩.
pub fn w_state(params: &WParams) -> PureState {
    let mut amps = vec![0.0; 8];
    amps[0b000] = params.e;
    amps[0b101] = params.f;
    amps[0b110] = params.f;
    PureState::from_real(vec![2, 2, 2], &amps).expect("normalized by construction")
}

/// Closed-form two-party reduction of the W family.
///
/// AB and AC coincide:
/// `[[e²,0,0,ef],[0,0,0,0],[0,0,f²,0],[ef,0,0,f²]]`;
/// BC is `[[e²,0,0,0],[0,f²,f²,0],[0,f²,f²,0],[0,0,0,0]]`.
pub fn w_reduced(params: &WParams, pair: Pair) -> DensityMatrix {
    let (e2, f2, ef) = (params.e2(), params.f2(), params.e * params.f);
    let rows = match pair {
        Pair::AB | Pair::AC => [
            vec![e2, 0.0, 0.0, ef],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, f2, 0.0],
            vec![ef, 0.0, 0.0, f2],
        ],
        Pair::BC => [
            vec![e2, 0.0, 0.0, 0.0],
            vec![0.0, f2, f2, 0.0],
            vec![0.0, f2, f2, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
        ],
    };
    let mat = CMatrix::from_real_rows(&rows).expect("square by construction");
    DensityMatrix::new(vec![2, 2], mat).expect("valid reduction by construction")
}

/// a|000⟩ + b|100⟩ + b|101⟩ + b|110⟩ + b|111⟩.
pub fn lambda_state(params: &LambdaParams) -> PureState {
    let mut amps = vec![0.0; 8];
    amps[0b000] = params.a;
    amps[0b100] = params.b;
    amps[0b101] = params.b;
    amps[0b110] = params.b;
    amps[0b111] = params.b;
    PureState::from_real(vec![2, 2, 2], &amps).expect("normalized by construction")
}

/// Two-party reduction of the Λ family. AB and AC coincide:
/// `[[a²,0,ab,ab],[0,0,0,0],[ab,0,2b²,2b²],[ab,0,2b²,2b²]]`;
/// BC comes out of the general partial trace (it is always PPT).
pub fn lambda_reduced(params: &LambdaParams, pair: Pair) -> DensityMatrix {
    let (a2, b2, ab) = (params.a2(), params.b2(), params.a * params.b);
    match pair {
        Pair::AB | Pair::AC => {
            let rows = [
                vec![a2, 0.0, ab, ab],
                vec![0.0, 0.0, 0.0, 0.0],
                vec![ab, 0.0, 2.0 * b2, 2.0 * b2],
                vec![ab, 0.0, 2.0 * b2, 2.0 * b2],
            ];
            let mat = CMatrix::from_real_rows(&rows).expect("square by construction");
            DensityMatrix::new(vec![2, 2], mat).expect("valid reduction by construction")
        }
        Pair::BC => lambda_state(params)
            .reduced(&[1, 2])
            .expect("reduction of a valid state"),
    }
}

/// (|000⟩ + |111⟩)/√2.
pub fn ghz() -> PureState {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut amps = vec![0.0; 8];
    amps[0b000] = s;
    amps[0b111] = s;
    PureState::from_real(vec![2, 2, 2], &amps).expect("normalized by construction")
}

/// (|00⟩ + |11⟩)/√2.
pub fn epr() -> PureState {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    PureState::from_real(vec![2, 2], &[s, 0.0, 0.0, s]).expect("normalized by construction")
}
