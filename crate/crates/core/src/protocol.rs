//! The ideal (noiseless) protocol: GHZ preparation, the Pauli encoding table
//! with its two-operation degeneracy, Bell-basis decomposition, teleportation
//! of the sender's revealed operation as a 4-level qudit, the receiver-side
//! Bell measurement and the exhaustive decode over all 16 operation pairs.
//!
//! Qubit roles follow the party layout `|ABDD>`: qubits 1,2 start with Alice
//! and Bob, qubits 3,4 with Dennis. After both senders forward their qubits,
//! Charlie holds qubits 1,2 and Dennis measures qubits 3,4.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::qmath::{i_sigma_y, sigma_x, sigma_z, CMatrix, Ket};

/// Local encoding operations. `iσ_y` is the real antisymmetric form
/// `[[0,-1],[1,0]]`; with that convention both operation pairs of every
/// table entry produce the identical ket, global sign included.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PauliOp {
    I,
    X,
    IY,
    Z,
}

impl PauliOp {
    pub const ALL: [PauliOp; 4] = [PauliOp::I, PauliOp::X, PauliOp::IY, PauliOp::Z];

    pub fn matrix(self) -> CMatrix {
        match self {
            PauliOp::I => CMatrix::identity(2),
            PauliOp::X => sigma_x(),
            PauliOp::IY => i_sigma_y(),
            PauliOp::Z => sigma_z(),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PauliOp::I => "I",
            PauliOp::X => "X",
            PauliOp::IY => "iY",
            PauliOp::Z => "Z",
        }
    }

    /// Qudit basis index used when the operation is revealed by
    /// teleportation: I, X, iY, Z map to 0, 1, 2, 3.
    pub fn qudit_index(self) -> usize {
        match self {
            PauliOp::I => 0,
            PauliOp::X => 1,
            PauliOp::IY => 2,
            PauliOp::Z => 3,
        }
    }

    pub fn from_qudit_index(index: usize) -> Option<PauliOp> {
        PauliOp::ALL.get(index).copied()
    }
}

impl std::str::FromStr for PauliOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "I" | "i" => Ok(PauliOp::I),
            "X" | "x" => Ok(PauliOp::X),
            "iY" | "iy" | "IY" => Ok(PauliOp::IY),
            "Z" | "z" => Ok(PauliOp::Z),
            other => Err(format!("unknown operation `{other}` (expected I, X, iY or Z)")),
        }
    }
}

/// The four Bell states of a qubit pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Bell {
    PhiPlus,
    PhiMinus,
    PsiPlus,
    PsiMinus,
}

impl Bell {
    pub const ALL: [Bell; 4] = [Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus];

    pub fn ket(self) -> Ket {
        match self {
            Bell::PhiPlus => Ket::two_term(4, 0, 3, 1.0),
            Bell::PhiMinus => Ket::two_term(4, 0, 3, -1.0),
            Bell::PsiPlus => Ket::two_term(4, 1, 2, 1.0),
            Bell::PsiMinus => Ket::two_term(4, 1, 2, -1.0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Bell::PhiPlus => "Phi+",
            Bell::PhiMinus => "Phi-",
            Bell::PsiPlus => "Psi+",
            Bell::PsiMinus => "Psi-",
        }
    }
}

/// Dennis' two classical bits: 00, 01, 10, 11 name the projectors onto
/// Phi+, Phi-, Psi+, Psi- respectively (P1, P2, Q1, Q2).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DennisOutcome {
    bits: u8,
}

impl DennisOutcome {
    pub const ALL: [DennisOutcome; 4] = [
        DennisOutcome { bits: 0b00 },
        DennisOutcome { bits: 0b01 },
        DennisOutcome { bits: 0b10 },
        DennisOutcome { bits: 0b11 },
    ];

    pub fn new(bits: u8) -> Option<Self> {
        (bits < 4).then_some(Self { bits })
    }

    pub fn bits(self) -> u8 {
        self.bits
    }

    pub fn bell(self) -> Bell {
        Bell::ALL[self.bits as usize]
    }

    pub fn projector_label(self) -> &'static str {
        ["P1", "P2", "Q1", "Q2"][self.bits as usize]
    }

    pub fn bit_string(self) -> &'static str {
        ["00", "01", "10", "11"][self.bits as usize]
    }
}

/// One row of the encoding table: the two operation pairs that produce the
/// same post-encoding state, that state's computational form, and its
/// Bell-pair form (Charlie pair ⊗ Dennis pair).
#[derive(Clone, Debug)]
pub struct LambdaEntry {
    pub index: usize,
    pub op_pairs: [(PauliOp, PauliOp); 2],
    pub ket: Ket,
    /// Two signed Bell-pair terms with coefficient `sign / sqrt(2)`.
    pub bell_form: [(Bell, Bell, f64); 2],
}

/// The full 8-entry table covering all 16 operation pairs, two per entry.
pub fn lambda_table() -> Vec<LambdaEntry> {
    use Bell::{PhiMinus as Fm, PhiPlus as Fp, PsiMinus as Sm, PsiPlus as Sp};
    use PauliOp::{I, IY, X, Z};

    let rows: [((PauliOp, PauliOp), (PauliOp, PauliOp), usize, usize, f64, [(Bell, Bell, f64); 2]);
        8] = [
        ((I, I), (Z, Z), 0b0000, 0b1111, 1.0, [(Fp, Fp, 1.0), (Fm, Fm, 1.0)]),
        ((I, Z), (Z, I), 0b0000, 0b1111, -1.0, [(Fp, Fm, 1.0), (Fm, Fp, 1.0)]),
        ((I, X), (Z, IY), 0b0100, 0b1011, 1.0, [(Sp, Fp, 1.0), (Sm, Fm, 1.0)]),
        ((I, IY), (Z, X), 0b0100, 0b1011, -1.0, [(Sp, Fm, 1.0), (Sm, Fp, 1.0)]),
        ((X, I), (IY, Z), 0b1000, 0b0111, 1.0, [(Sp, Fp, 1.0), (Sm, Fm, -1.0)]),
        ((X, Z), (IY, I), 0b1000, 0b0111, -1.0, [(Sp, Fm, 1.0), (Sm, Fp, -1.0)]),
        ((X, X), (IY, IY), 0b1100, 0b0011, 1.0, [(Fp, Fp, 1.0), (Fm, Fm, -1.0)]),
        ((X, IY), (IY, X), 0b1100, 0b0011, -1.0, [(Fp, Fm, 1.0), (Fm, Fp, -1.0)]),
    ];

    rows.iter()
        .enumerate()
        .map(|(k, &(p0, p1, a, b, sign, bell_form))| LambdaEntry {
            index: k + 1,
            op_pairs: [p0, p1],
            ket: Ket::two_term(16, a, b, sign),
            bell_form,
        })
        .collect()
}

/// The post-encoding state `|λ_i>` for `i` in 1..=8.
pub fn lambda_ket(i: usize) -> Result<Ket> {
    if !(1..=8).contains(&i) {
        return Err(Error::InvalidParameter {
            name: "state index",
            value: i as f64,
        });
    }
    Ok(lambda_table()[i - 1].ket.clone())
}

/// The four-qubit GHZ resource `(|0000> + |1111>)/sqrt(2)`.
pub fn ghz4() -> Ket {
    Ket::two_term(16, 0b0000, 0b1111, 1.0)
}

/// Applies Alice's and Bob's operations to the resource and looks the result
/// up in the table. The computed ket must match a table entry entrywise,
/// sign included.
pub fn encode(a: PauliOp, b: PauliOp) -> (usize, Ket) {
    let op = a.matrix().kron(&b.matrix()).kron(&CMatrix::identity(4));
    let ket = op.mul_ket(&ghz4());
    let index = lambda_table()
        .iter()
        .find(|entry| entry.ket.approx_eq(&ket, 1e-12))
        .map(|entry| entry.index)
        .expect("every operation pair maps onto a table entry");
    (index, ket)
}

/// Coefficients of a 16-dimensional ket in the product-Bell basis
/// (Charlie pair ⊗ Dennis pair), in the fixed `Bell::ALL` × `Bell::ALL`
/// order.
pub fn bell_decompose(ket: &Ket) -> Vec<((Bell, Bell), Complex64)> {
    assert_eq!(ket.dim(), 16, "bell_decompose expects a 4-qubit ket");
    let mut out = Vec::with_capacity(16);
    for cc in Bell::ALL {
        for dd in Bell::ALL {
            let basis = cc.ket().tensor(&dd.ket());
            out.push(((cc, dd), basis.inner(ket)));
        }
    }
    out
}

/// Teleports a 4-level qudit through the maximally entangled resource
/// `|ψ> = (1/2) Σ_{i=0}^{3} |ii>` by applying the global projector
/// `|ψ><ψ|_BC ⊗ I_C'` to `|χ>_B ⊗ |ψ>_CC'`.
///
/// Returns the conditional output state on C' and the success probability
/// of the projection, which is 1/16 for any normalized input.
pub fn teleport_qudit(chi: &Ket) -> Result<(Ket, f64)> {
    if chi.dim() != 4 {
        return Err(Error::DimensionMismatch {
            left: chi.dim(),
            right: 4,
        });
    }
    chi.check_normalized(1e-12)?;

    let psi = {
        let mut amps = vec![Complex64::ZERO; 16];
        for i in 0..4 {
            amps[i * 4 + i] = Complex64::new(0.5, 0.0);
        }
        Ket::from_amps(amps)
    };

    // Full register B ⊗ C ⊗ C', dimension 64.
    let input = chi.tensor(&psi);

    // Contract <ψ|_BC against the B,C slots: u[c'] = Σ_{b,c} ψ*[b,c] v[b,c,c'].
    let mut unnorm = vec![Complex64::ZERO; 4];
    for b in 0..4 {
        for c in 0..4 {
            let w = psi.amp(b * 4 + c).conj();
            if w == Complex64::ZERO {
                continue;
            }
            for cp in 0..4 {
                unnorm[cp] += w * input.amp(b * 16 + c * 4 + cp);
            }
        }
    }
    let u = Ket::from_amps(unnorm);
    // Post-projection state is ψ_BC ⊗ u; ψ is normalized, so the branch
    // probability is |u|².
    let probability = u.norm().powi(2);
    if probability < 1e-15 {
        return Err(Error::ZeroProbabilityBranch { probability });
    }
    Ok((u.normalized(), probability))
}

/// Projects qubits 3,4 onto the Bell state named by `outcome` and returns
/// Charlie's renormalized 2-qubit state with the branch probability.
pub fn dennis_measure_ideal(ket: &Ket, outcome: DennisOutcome) -> Result<(Ket, f64)> {
    assert_eq!(ket.dim(), 16, "dennis_measure_ideal expects a 4-qubit ket");
    let bell = outcome.bell().ket();
    let mut amps = vec![Complex64::ZERO; 4];
    for c in 0..4 {
        for d in 0..4 {
            amps[c] += bell.amp(d).conj() * ket.amp(c * 4 + d);
        }
    }
    let charlie = Ket::from_amps(amps);
    let probability = charlie.norm().powi(2);
    if probability < 1e-12 {
        return Err(Error::ZeroProbabilityBranch { probability });
    }
    Ok((charlie.normalized(), probability))
}

/// Identifies which Bell state a normalized 2-qubit ket is, up to global
/// phase. Returns `None` if it is not a Bell state.
pub fn identify_bell(ket: &Ket) -> Option<Bell> {
    Bell::ALL
        .into_iter()
        .find(|b| (b.ket().inner(ket).norm() - 1.0).abs() < 1e-12)
}

/// The four candidate table entries once Bob's operation is known.
pub fn branch_candidates(bob: PauliOp) -> Vec<usize> {
    lambda_table()
        .iter()
        .filter(|e| e.op_pairs.iter().any(|&(_, b)| b == bob))
        .map(|e| e.index)
        .collect()
}

/// Charlie's decode: the candidate entry consistent with his identified
/// Bell state, Dennis' bits and Bob's revealed operation determines Alice's
/// operation uniquely.
pub fn decode_alice(
    charlie: Bell,
    outcome: DennisOutcome,
    revealed_bob: PauliOp,
) -> Option<PauliOp> {
    let table = lambda_table();
    let matches: Vec<&LambdaEntry> = table
        .iter()
        .filter(|e| e.op_pairs.iter().any(|&(_, b)| b == revealed_bob))
        .filter(|e| {
            e.bell_form
                .iter()
                .any(|&(cc, dd, _)| cc == charlie && dd == outcome.bell())
        })
        .collect();
    match matches.as_slice() {
        [entry] => entry
            .op_pairs
            .iter()
            .find(|&&(_, b)| b == revealed_bob)
            .map(|&(a, _)| a),
        _ => None,
    }
}

/// One decoded branch of the ideal run.
#[derive(Clone, Debug)]
pub struct DecodeRecord {
    pub alice: PauliOp,
    pub bob: PauliOp,
    pub lambda_index: usize,
    pub outcome: DennisOutcome,
    pub probability: f64,
    pub charlie: Bell,
    pub decoded: Option<PauliOp>,
}

impl DecodeRecord {
    pub fn correct(&self) -> bool {
        self.decoded == Some(self.alice)
    }
}

/// Runs the ideal protocol for one operation pair over every
/// nonzero-probability Dennis outcome: encode, teleport Bob's revealed
/// operation, measure, decode.
pub fn run_ideal(alice: PauliOp, bob: PauliOp) -> Result<Vec<DecodeRecord>> {
    let (lambda_index, ket) = encode(alice, bob);

    // Bob reveals his operation as a qudit basis state through the
    // teleportation channel; Charlie reads the index back out.
    let (qudit, _p) = teleport_qudit(&Ket::basis(4, bob.qudit_index()))?;
    let revealed = (0..4)
        .find(|&k| (qudit.amp(k).norm() - 1.0).abs() < 1e-12)
        .and_then(PauliOp::from_qudit_index)
        .ok_or(Error::ZeroProbabilityBranch { probability: 0.0 })?;

    let mut records = Vec::new();
    for outcome in DennisOutcome::ALL {
        let (charlie, probability) = match dennis_measure_ideal(&ket, outcome) {
            Ok(pair) => pair,
            Err(Error::ZeroProbabilityBranch { .. }) => continue,
            Err(e) => return Err(e),
        };
        let bell = identify_bell(&charlie).ok_or(Error::NotNormalized {
            norm: charlie.norm(),
        })?;
        records.push(DecodeRecord {
            alice,
            bob,
            lambda_index,
            outcome,
            probability,
            charlie: bell,
            decoded: decode_alice(bell, outcome, revealed),
        });
    }
    Ok(records)
}

/// Summary of the exhaustive run over operation pairs.
#[derive(Clone, Debug)]
pub struct DecodeTable {
    pub records: Vec<DecodeRecord>,
    pub pairs_total: usize,
    pub pairs_decoded: usize,
}

impl DecodeTable {
    pub fn all_decoded(&self) -> bool {
        self.pairs_decoded == self.pairs_total
    }

    /// Decode-table success rate: the fraction of pairs whose every branch
    /// decodes correctly. This is a counting quantity, exactly 1.0 when the
    /// protocol works.
    pub fn success_rate(&self) -> f64 {
        self.pairs_decoded as f64 / self.pairs_total as f64
    }
}

/// Exhaustive decode over operation pairs; `bob_filter` restricts Bob's
/// operation (4 pairs) and `None` runs all 16. A pair counts as decoded only
/// if every nonzero branch decodes correctly and the branch probabilities
/// sum to 1 within 1e-12.
pub fn run_ideal_exhaustive(bob_filter: Option<PauliOp>) -> Result<DecodeTable> {
    let mut records = Vec::new();
    let mut pairs_total = 0;
    let mut pairs_decoded = 0;
    for alice in PauliOp::ALL {
        for bob in PauliOp::ALL {
            if bob_filter.is_some_and(|f| f != bob) {
                continue;
            }
            pairs_total += 1;
            let recs = run_ideal(alice, bob)?;
            let p_total: f64 = recs.iter().map(|r| r.probability).sum();
            if recs.iter().all(DecodeRecord::correct) && (p_total - 1.0).abs() < 1e-12 {
                pairs_decoded += 1;
            }
            records.extend(recs);
        }
    }
    Ok(DecodeTable {
        records,
        pairs_total,
        pairs_decoded,
    })
}
