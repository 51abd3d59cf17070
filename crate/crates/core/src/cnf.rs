//! 3-SAT instances: DIMACS I/O, evaluation and an exhaustive satisfiability
//! check.

use std::fmt;
use std::fmt::Write as _;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// `is_satisfiable` enumerates assignments in a `u64` counter.
pub const MAX_EXHAUSTIVE_VARIABLES: usize = 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error("missing `p cnf <variables> <clauses>` header")]
    MissingHeader,
    #[error("line {line}: malformed header `{text}`")]
    MalformedHeader { line: usize, text: String },
    #[error("line {line}: `{token}` is not an integer literal")]
    BadToken { line: usize, token: String },
    #[error("clause {clause} has {size} literals, expected exactly 3")]
    ClauseSize { clause: usize, size: usize },
    #[error("clause {clause} mentions variable {variable} more than once")]
    RepeatedVariable { clause: usize, variable: usize },
    #[error("clause {clause} uses variable {variable}, but the formula declares {variable_count}")]
    VariableOutOfRange {
        clause: usize,
        variable: usize,
        variable_count: usize,
    },
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("a formula needs at least one variable and one clause")]
    Empty,
    #[error("assignment covers {got} variables, formula has {expected}")]
    PartialAssignment { expected: usize, got: usize },
    #[error("random formulas need at least 3 variables, got {0}")]
    TooFewVariables(usize),
}

/// A variable (1-based) or its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    variable: usize,
    negated: bool,
}

impl Literal {
    pub fn new(variable: usize, negated: bool) -> Self {
        assert!(variable >= 1, "variables are 1-based");
        Literal { variable, negated }
    }

    pub fn positive(variable: usize) -> Self {
        Literal::new(variable, false)
    }

    pub fn negative(variable: usize) -> Self {
        Literal::new(variable, true)
    }

    /// From a nonzero DIMACS integer.
    pub fn from_dimacs(value: i64) -> Option<Self> {
        (value != 0).then(|| Literal::new(value.unsigned_abs() as usize, value < 0))
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64;
        if self.negated {
            -v
        } else {
            v
        }
    }

    pub fn variable(self) -> usize {
        self.variable
    }

    pub fn is_negated(self) -> bool {
        self.negated
    }

    pub fn holds_under(self, t: &Assignment) -> bool {
        t.value(self.variable) != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "~u{}", self.variable)
        } else {
            write!(f, "u{}", self.variable)
        }
    }
}

/// Exactly three literals over pairwise distinct variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Clause([Literal; 3]);

impl Clause {
    pub fn new(literals: [Literal; 3]) -> Result<Self, CnfError> {
        for i in 0..3 {
            for j in i + 1..3 {
                if literals[i].variable == literals[j].variable {
                    return Err(CnfError::RepeatedVariable {
                        clause: 0,
                        variable: literals[i].variable,
                    });
                }
            }
        }
        Ok(Clause(literals))
    }

    pub fn from_dimacs(values: [i64; 3]) -> Result<Self, CnfError> {
        let lits = values.map(|v| Literal::from_dimacs(v).expect("DIMACS literals are nonzero"));
        Clause::new(lits)
    }

    pub fn literals(&self) -> &[Literal; 3] {
        &self.0
    }

    pub fn is_satisfied_by(&self, t: &Assignment) -> bool {
        self.0.iter().any(|l| l.holds_under(t))
    }
}

impl fmt::Display for Clause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// A 3-SAT instance over variables `1..=variable_count`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CnfFormula {
    variable_count: usize,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(variable_count: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        if variable_count == 0 || clauses.is_empty() {
            return Err(CnfError::Empty);
        }
        for (j, c) in clauses.iter().enumerate() {
            for l in c.literals() {
                if l.variable > variable_count {
                    return Err(CnfError::VariableOutOfRange {
                        clause: j + 1,
                        variable: l.variable,
                        variable_count,
                    });
                }
            }
        }
        Ok(CnfFormula {
            variable_count,
            clauses,
        })
    }

    pub fn variable_count(&self) -> usize {
        self.variable_count
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Parses DIMACS CNF. Clauses may span lines; each ends at a `0`.
    pub fn parse_dimacs(text: &str) -> Result<Self, CnfError> {
        let mut header: Option<(usize, usize)> = None;
        let mut clauses = Vec::new();
        let mut current: Vec<Literal> = Vec::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if line.starts_with('%') {
                break;
            }
            if line.starts_with('p') {
                if header.is_some() {
                    return Err(CnfError::MalformedHeader {
                        line: line_no,
                        text: line.to_string(),
                    });
                }
                header = Some(parse_header(line).ok_or_else(|| CnfError::MalformedHeader {
                    line: line_no,
                    text: line.to_string(),
                })?);
                continue;
            }
            let Some((n, _)) = header else {
                return Err(CnfError::MissingHeader);
            };
            for token in line.split_whitespace() {
                let value: i64 = token.parse().map_err(|_| CnfError::BadToken {
                    line: line_no,
                    token: token.to_string(),
                })?;
                if value == 0 {
                    let clause = clauses.len() + 1;
                    clauses.push(finish_clause(std::mem::take(&mut current), clause, n)?);
                } else {
                    current.push(Literal::from_dimacs(value).expect("nonzero"));
                }
            }
        }

        let (n, m) = header.ok_or(CnfError::MissingHeader)?;
        if !current.is_empty() {
            // trailing clause without its terminating 0
            let clause = clauses.len() + 1;
            clauses.push(finish_clause(current, clause, n)?);
        }
        if clauses.len() != m {
            return Err(CnfError::ClauseCountMismatch {
                declared: m,
                found: clauses.len(),
            });
        }
        CnfFormula::new(n, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.variable_count, self.clauses.len());
        for c in &self.clauses {
            for l in c.literals() {
                let _ = write!(out, "{} ", l.to_dimacs());
            }
            out.push_str("0\n");
        }
        out
    }

    /// True iff every clause has a literal true under `t`.
    pub fn evaluate(&self, t: &Assignment) -> Result<bool, CnfError> {
        if t.variable_count() != self.variable_count {
            return Err(CnfError::PartialAssignment {
                expected: self.variable_count,
                got: t.variable_count(),
            });
        }
        Ok(self.clauses.iter().all(|c| c.is_satisfied_by(t)))
    }

    /// Exhaustive search over all `2^n` assignments in counting order; the
    /// first satisfying one is returned.
    ///
    /// Panics if the formula has more than [`MAX_EXHAUSTIVE_VARIABLES`]
    /// variables.
    pub fn is_satisfiable(&self) -> Option<Assignment> {
        let n = self.variable_count;
        assert!(n <= MAX_EXHAUSTIVE_VARIABLES, "{n} variables is beyond exhaustive search");
        // (positive mask, negative mask) per clause, bit i-1 for variable i
        let masks: Vec<(u64, u64)> = self
            .clauses
            .iter()
            .map(|c| {
                c.literals().iter().fold((0, 0), |(pos, neg), l| {
                    let bit = 1u64 << (l.variable - 1);
                    if l.negated {
                        (pos, neg | bit)
                    } else {
                        (pos | bit, neg)
                    }
                })
            })
            .collect();
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        let mut bits = 0u64;
        loop {
            if masks.iter().all(|&(pos, neg)| bits & pos != 0 || !bits & neg != 0) {
                return Some(Assignment::from_bits(n, bits));
            }
            if bits == all {
                return None;
            }
            bits += 1;
        }
    }

    /// `m` clauses, each over 3 distinct uniformly chosen variables with
    /// uniform signs. Deterministic in `seed`.
    pub fn random(n: usize, m: usize, seed: u64) -> Result<Self, CnfError> {
        if n < 3 {
            return Err(CnfError::TooFewVariables(n));
        }
        if m == 0 {
            return Err(CnfError::Empty);
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let clauses = (0..m)
            .map(|_| {
                let mut vars = sample(&mut rng, n, 3).into_vec();
                vars.sort_unstable();
                let lits = [0, 1, 2].map(|k| Literal::new(vars[k] + 1, rng.random_bool(0.5)));
                Clause::new(lits).expect("sampled variables are distinct")
            })
            .collect();
        CnfFormula::new(n, clauses)
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (j, c) in self.clauses.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("}")
    }
}

fn parse_header(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    if it.next()? != "p" || it.next()? != "cnf" {
        return None;
    }
    let n = it.next()?.parse().ok()?;
    let m = it.next()?.parse().ok()?;
    it.next().is_none().then_some((n, m))
}

fn finish_clause(lits: Vec<Literal>, clause: usize, n: usize) -> Result<Clause, CnfError> {
    let size = lits.len();
    let lits: [Literal; 3] = lits
        .try_into()
        .map_err(|_| CnfError::ClauseSize { clause, size })?;
    for l in &lits {
        if l.variable > n {
            return Err(CnfError::VariableOutOfRange {
                clause,
                variable: l.variable,
                variable_count: n,
            });
        }
    }
    Clause::new(lits).map_err(|e| match e {
        CnfError::RepeatedVariable { variable, .. } => CnfError::RepeatedVariable { clause, variable },
        other => other,
    })
}

/// A total truth assignment for variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment(Vec<bool>);

impl Assignment {
    /// `values[i]` is the value of variable `i + 1`.
    pub fn new(values: Vec<bool>) -> Self {
        Assignment(values)
    }

    /// Bit `i` holds variable `i + 1`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Assignment((0..n).map(|i| bits >> i & 1 == 1).collect())
    }

    pub fn variable_count(&self) -> usize {
        self.0.len()
    }

    /// Value of the 1-based `variable`. Panics if out of range.
    pub fn value(&self, variable: usize) -> bool {
        self.0[variable - 1]
    }

    pub fn values(&self) -> &[bool] {
        &self.0
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "u{}={}", i + 1, if v { 'T' } else { 'F' })?;
        }
        f.write_str(")")
    }
}
