use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::seq::{hamming_capped, longest_run, revcomp_bytes};
use super::SeqError;

/// Thresholds every designed (non-protector) domain must satisfy.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintParams {
    /// Minimum Hamming distance to every accepted sequence of the same length
    /// and to its reverse complement, and to the candidate's own reverse complement.
    pub d_min: usize,
    pub gc_min: f64,
    pub gc_max: f64,
    /// Longest allowed homopolymer run.
    pub max_run: usize,
    /// No k-mer of this length may be shared with an accepted sequence or its
    /// reverse complement. `None` disables the check.
    pub kmer_ban: Option<usize>,
    /// Candidates drawn per bond before giving up.
    pub max_attempts: u32,
}

impl Default for ConstraintParams {
    fn default() -> Self {
        ConstraintParams { d_min: 4, gc_min: 0.4, gc_max: 0.6, max_run: 3, kmer_ban: Some(7), max_attempts: 10_000 }
    }
}

impl ConstraintParams {
    pub const MAX_KMER: usize = 32;

    /// Checks internal consistency, and that `d_min` fits the shortest domain.
    pub fn validate(&self, shortest_domain: Option<usize>) -> Result<(), SeqError> {
        let invalid = |reason: String| Err(SeqError::InvalidParams(reason));
        if !(0.0..=1.0).contains(&self.gc_min) || !(0.0..=1.0).contains(&self.gc_max) || self.gc_min > self.gc_max {
            return invalid(format!("GC window [{}, {}] must satisfy 0 <= min <= max <= 1", self.gc_min, self.gc_max));
        }
        if self.max_attempts == 0 {
            return invalid("max_attempts must be at least 1".into());
        }
        if let Some(k) = self.kmer_ban {
            if k == 0 || k > Self::MAX_KMER {
                return invalid(format!("kmer_ban must be between 1 and {}", Self::MAX_KMER));
            }
        }
        if let Some(len) = shortest_domain {
            if self.d_min > len {
                return invalid(format!("d_min {} exceeds the shortest domain length {len}", self.d_min));
            }
        }
        Ok(())
    }
}

/// First rule a rejected candidate violated.
#[derive(Debug, Clone, PartialEq)]
pub enum Rejection {
    InvalidBase,
    Gc(f64),
    Run(usize),
    /// Too close to an accepted sequence.
    Hamming(usize),
    /// Too close to the reverse complement of an accepted sequence.
    ReverseComplement(usize),
    /// Too close to its own reverse complement.
    SelfComplement(usize),
    SharedKmer,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rejection::InvalidBase => write!(f, "invalid base"),
            Rejection::Gc(x) => write!(f, "gc fraction {x:.3} outside window"),
            Rejection::Run(n) => write!(f, "homopolymer run of {n}"),
            Rejection::Hamming(d) => write!(f, "hamming distance {d} to an accepted sequence"),
            Rejection::ReverseComplement(d) => write!(f, "hamming distance {d} to an accepted reverse complement"),
            Rejection::SelfComplement(d) => write!(f, "hamming distance {d} to own reverse complement"),
            Rejection::SharedKmer => write!(f, "shares a banned k-mer"),
        }
    }
}

fn base_code(b: u8) -> u64 {
    match b {
        b'A' => 0,
        b'C' => 1,
        b'G' => 2,
        _ => 3,
    }
}

/// 2-bit packed k-mers of `s` (k <= 32).
fn kmers(s: &[u8], k: usize) -> impl Iterator<Item = u64> + '_ {
    s.windows(k).map(|w| w.iter().fold(0u64, |acc, &b| (acc << 2) | base_code(b)))
}

/// A sequence paired with its reverse complement.
type SeqPair = (Vec<u8>, Vec<u8>);

/// Accepted sequences indexed for fast candidate checks.
#[derive(Debug, Clone, Default)]
pub struct AcceptedSet {
    /// `(sequence, reverse complement)` grouped by length.
    by_len: HashMap<usize, Vec<SeqPair>>,
    kmers: HashSet<u64>,
    kmer_len: Option<usize>,
    count: usize,
}

impl AcceptedSet {
    pub fn new(params: &ConstraintParams) -> Self {
        AcceptedSet { kmer_len: params.kmer_ban, ..Default::default() }
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn insert(&mut self, s: &[u8]) {
        let rc = revcomp_bytes(s);
        if let Some(k) = self.kmer_len {
            self.kmers.extend(kmers(s, k));
            self.kmers.extend(kmers(&rc, k));
        }
        self.by_len.entry(s.len()).or_default().push((s.to_vec(), rc));
        self.count += 1;
    }

    /// Tests a candidate against every rule, in a fixed order.
    pub fn check(&self, c: &[u8], p: &ConstraintParams) -> Result<(), Rejection> {
        if c.is_empty() || !c.iter().all(|b| b"ACGT".contains(b)) {
            return Err(Rejection::InvalidBase);
        }
        let gc = c.iter().filter(|b| matches!(b, b'G' | b'C')).count() as f64 / c.len() as f64;
        if gc < p.gc_min || gc > p.gc_max {
            return Err(Rejection::Gc(gc));
        }
        let run = longest_run(c);
        if run > p.max_run {
            return Err(Rejection::Run(run));
        }
        if let Some(same_len) = self.by_len.get(&c.len()) {
            for (a, a_rc) in same_len {
                let d = hamming_capped(c, a, p.d_min);
                if d < p.d_min {
                    return Err(Rejection::Hamming(d));
                }
                let d = hamming_capped(c, a_rc, p.d_min);
                if d < p.d_min {
                    return Err(Rejection::ReverseComplement(d));
                }
            }
        }
        let d = hamming_capped(c, &revcomp_bytes(c), p.d_min);
        if d < p.d_min {
            return Err(Rejection::SelfComplement(d));
        }
        if let Some(k) = p.kmer_ban {
            let banned = match self.kmer_len {
                Some(own) if own == k => kmers(c, k).any(|m| self.kmers.contains(&m)),
                _ => self.by_len.values().flatten().any(|(a, a_rc)| {
                    let ours: HashSet<u64> = kmers(a, k).chain(kmers(a_rc, k)).collect();
                    kmers(c, k).any(|m| ours.contains(&m))
                }),
            };
            if banned {
                return Err(Rejection::SharedKmer);
            }
        }
        Ok(())
    }
}

/// Checks `candidate` against `accepted` under `params`.
pub fn check_candidate(candidate: &str, accepted: &[String], params: &ConstraintParams) -> Result<(), Rejection> {
    let mut set = AcceptedSet::new(params);
    for a in accepted {
        set.insert(a.as_bytes());
    }
    set.check(candidate.as_bytes(), params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> ConstraintParams {
        ConstraintParams::default()
    }

    #[test]
    fn homopolymer_fails_on_run() {
        // GC is checked first, so give the run a passing GC window.
        let loose = ConstraintParams { gc_min: 0.0, ..p() };
        assert_eq!(check_candidate("AAAAAAAAAA", &[], &loose), Err(Rejection::Run(10)));
    }

    #[test]
    fn at_repeat_fails_on_gc() {
        assert_eq!(check_candidate("ATATATATAT", &[], &p()), Err(Rejection::Gc(0.0)));
        assert!(matches!(check_candidate("AAAAAAAAAA", &[], &p()), Err(Rejection::Gc(_))));
    }

    #[test]
    fn duplicate_of_accepted_fails_on_hamming() {
        let s = "ACGTTGCAAC";
        assert_eq!(check_candidate(s, &[], &p()), Ok(()));
        assert_eq!(check_candidate(s, &[s.to_string()], &p()), Err(Rejection::Hamming(0)));
    }

    #[test]
    fn reverse_complement_of_accepted_is_rejected() {
        let s = "ACGTTGCAAC";
        let rc = crate::seqdesign::revcomp(s).unwrap();
        let r = check_candidate(&rc, &[s.to_string()], &ConstraintParams { kmer_ban: None, ..p() });
        assert_eq!(r, Err(Rejection::ReverseComplement(0)));
    }

    #[test]
    fn palindrome_fails_self_complement() {
        // GACGATCGTC is its own reverse complement.
        assert_eq!(check_candidate("GACGATCGTC", &[], &p()), Err(Rejection::SelfComplement(0)));
    }

    #[test]
    fn shared_kmer_is_rejected() {
        let accepted = vec!["ACGTTGCAAC".to_string()];
        // Differs in three trailing positions but shares ACGTTGC.
        let r = check_candidate("ACGTTGCTGG", &accepted, &ConstraintParams { d_min: 3, ..p() });
        assert_eq!(r, Err(Rejection::SharedKmer));
        let r = check_candidate("ACGTTGCTGG", &accepted, &ConstraintParams { d_min: 3, kmer_ban: None, ..p() });
        assert_eq!(r, Ok(()));
    }

    #[test]
    fn different_lengths_are_not_hamming_checked() {
        let accepted = vec!["ACGTTGCAAC".to_string()];
        let r = check_candidate("ACGTTGCAACG", &accepted, &ConstraintParams { kmer_ban: None, ..p() });
        assert_eq!(r, Ok(()));
    }

    #[test]
    fn invalid_base_is_rejected() {
        assert_eq!(check_candidate("ACGNNGCAAC", &[], &p()), Err(Rejection::InvalidBase));
    }

    #[test]
    fn params_validation() {
        assert!(p().validate(Some(10)).is_ok());
        assert!(p().validate(Some(3)).is_err());
        assert!(ConstraintParams { gc_min: 0.7, ..p() }.validate(None).is_err());
        assert!(ConstraintParams { kmer_ban: Some(0), ..p() }.validate(None).is_err());
        assert!(ConstraintParams { max_attempts: 0, ..p() }.validate(None).is_err());
    }
}
