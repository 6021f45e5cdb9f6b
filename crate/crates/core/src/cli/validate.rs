//! Stand-alone re-check of a DNAData sequence table.
//!
//! This deliberately shares no predicate code with the generator. Designed
//! domains come in bonded pairs `(s, revcomp(s))`; every pair is reduced to
//! one canonical representative and the constraints are re-checked pairwise
//! over all representatives. Poly-T domains are protectors and are skipped.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::export::{read_dnadata, ExportError};
use crate::seqdesign::ConstraintParams;

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    InvalidBase {
        strand: String,
        domain: usize,
    },
    Gc {
        seq: String,
        gc: f64,
    },
    Run {
        seq: String,
        run: usize,
    },
    Hamming {
        a: String,
        b: String,
        distance: usize,
    },
    ReverseComplement {
        a: String,
        b: String,
        distance: usize,
    },
    SelfComplement {
        seq: String,
        distance: usize,
    },
    SharedKmer {
        a: String,
        b: String,
        kmer: String,
    },
    /// A designed domain whose reverse complement appears a different number of times.
    Unpaired {
        seq: String,
        count: usize,
        partner_count: usize,
    },
    /// A strand whose full sequence is not its domains concatenated.
    FullSequenceMismatch {
        strand: String,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::InvalidBase { strand, domain } => write!(f, "{strand} d{domain}: invalid base"),
            Violation::Gc { seq, gc } => write!(f, "{seq}: GC fraction {gc:.3} outside window"),
            Violation::Run { seq, run } => write!(f, "{seq}: homopolymer run of {run}"),
            Violation::Hamming { a, b, distance } => write!(f, "{a} vs {b}: Hamming distance {distance}"),
            Violation::ReverseComplement { a, b, distance } => {
                write!(f, "{a} vs revcomp({b}): Hamming distance {distance}")
            }
            Violation::SelfComplement { seq, distance } => {
                write!(f, "{seq}: Hamming distance {distance} to its own reverse complement")
            }
            Violation::SharedKmer { a, b, kmer } => write!(f, "{a} and {b} share k-mer {kmer}"),
            Violation::Unpaired { seq, count, partner_count } => {
                write!(f, "{seq} appears {count} times but its reverse complement appears {partner_count} times")
            }
            Violation::FullSequenceMismatch { strand } => {
                write!(f, "{strand}: full sequence differs from its concatenated domains")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValidationReport {
    pub strands: usize,
    pub protector_domains: usize,
    /// Distinct bonded pairs found.
    pub pairs: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

fn complement(b: u8) -> u8 {
    match b {
        b'A' => b'T',
        b'T' => b'A',
        b'C' => b'G',
        b'G' => b'C',
        other => other,
    }
}

fn reverse_complement(s: &str) -> String {
    s.bytes().rev().map(|b| complement(b) as char).collect()
}

fn distance(a: &str, b: &str) -> usize {
    a.bytes().zip(b.bytes()).filter(|(x, y)| x != y).count()
}

fn gc(s: &str) -> f64 {
    s.bytes().filter(|b| *b == b'G' || *b == b'C').count() as f64 / s.len() as f64
}

fn max_run(s: &str) -> usize {
    let b = s.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        let j = b[i..].iter().take_while(|&&x| x == b[i]).count();
        best = best.max(j);
        i += j;
    }
    best
}

fn kmer_set(s: &str, k: usize) -> BTreeSet<&str> {
    if s.len() < k {
        return BTreeSet::new();
    }
    (0..=s.len() - k).map(|i| &s[i..i + k]).collect()
}

/// Re-checks a list of designed domain sequences (protectors excluded).
pub fn validate_domains(domains: &[String], params: &ConstraintParams) -> Vec<Violation> {
    let mut violations = Vec::new();
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for d in domains {
        *counts.entry(d.as_str()).or_default() += 1;
    }
    let mut reps: BTreeSet<String> = BTreeSet::new();
    for (&seq, &count) in &counts {
        let rc = reverse_complement(seq);
        let partner_count = counts.get(rc.as_str()).copied().unwrap_or(0);
        if (count != 1 || partner_count != 1) && (seq <= rc.as_str() || partner_count == 0) {
            violations.push(Violation::Unpaired { seq: seq.to_string(), count, partner_count });
        }
        reps.insert(if seq <= rc.as_str() { seq.to_string() } else { rc });
    }
    let reps: Vec<String> = reps.into_iter().collect();
    let rcs: Vec<String> = reps.iter().map(|s| reverse_complement(s)).collect();

    for s in &reps {
        let g = gc(s);
        if g < params.gc_min - 1e-12 || g > params.gc_max + 1e-12 {
            violations.push(Violation::Gc { seq: s.clone(), gc: g });
        }
        let run = max_run(s);
        if run > params.max_run {
            violations.push(Violation::Run { seq: s.clone(), run });
        }
        let own = distance(s, &reverse_complement(s));
        if own < params.d_min {
            violations.push(Violation::SelfComplement { seq: s.clone(), distance: own });
        }
    }
    let kmers: Vec<(BTreeSet<&str>, BTreeSet<&str>)> = match params.kmer_ban {
        Some(k) => reps.iter().zip(&rcs).map(|(s, rc)| (kmer_set(s, k), kmer_set(rc, k))).collect(),
        None => Vec::new(),
    };
    for (i, a) in reps.iter().enumerate() {
        for (j, b) in reps.iter().enumerate().skip(i + 1) {
            if a.len() == b.len() {
                let d = distance(a, b);
                if d < params.d_min {
                    violations.push(Violation::Hamming { a: a.clone(), b: b.clone(), distance: d });
                }
                let d = distance(a, &rcs[j]);
                if d < params.d_min {
                    violations.push(Violation::ReverseComplement { a: a.clone(), b: b.clone(), distance: d });
                }
            }
            if let (Some((ka, _)), Some((kb, kb_rc))) = (kmers.get(i), kmers.get(j)) {
                if let Some(m) = ka.intersection(kb).chain(ka.intersection(kb_rc)).next() {
                    violations.push(Violation::SharedKmer { a: a.clone(), b: b.clone(), kmer: m.to_string() });
                }
            }
        }
    }
    violations
}

/// Re-checks a DNAData table as written by the exporter.
pub fn validate_dnadata(bytes: &[u8], params: &ConstraintParams) -> Result<ValidationReport, ExportError> {
    let table = read_dnadata(bytes)?;
    let mut report = ValidationReport { strands: table.rows.len(), ..Default::default() };
    let mut designed = Vec::new();
    for row in &table.rows {
        let concatenated: String = row.domains.iter().flatten().map(String::as_str).collect();
        if concatenated != row.full_sequence {
            report.violations.push(Violation::FullSequenceMismatch { strand: row.strand_id.clone() });
        }
        for (i, d) in row.domains.iter().enumerate() {
            let Some(d) = d else { continue };
            if d.is_empty() || !d.bytes().all(|b| b"ACGT".contains(&b)) {
                report.violations.push(Violation::InvalidBase { strand: row.strand_id.clone(), domain: i + 1 });
            } else if d.bytes().all(|b| b == b'T') {
                report.protector_domains += 1;
            } else {
                designed.push(d.clone());
            }
        }
    }
    let distinct: BTreeSet<String> = designed.iter().map(|s| s.clone().min(reverse_complement(s))).collect();
    report.pairs = distinct.len();
    report.violations.extend(validate_domains(&designed, params));
    Ok(report)
}
