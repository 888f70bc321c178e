//! Command-line surface: insertion algorithms, diagram products, module
//! actions and straightening, dimension tables, Schur expansions, value
//! enumeration, and self-verification suites.
//!
//! Exit codes: 0 success, 1 user error or failed verification, 2 refused
//! resource bound.  Value arguments accept `-` to read from stdin.  `--format
//! records` emits one JSON object with a `format: 1` header instead of the
//! text grammar.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::json;

use mmpa::algebra::{idempotent, mp_multiply, pa_multiply, MPElement, PAElement};
use mmpa::msetpart::MultisetPartition;
use mmpa::oracle::{commutant_dimension, graded_piece_multiplicities};
use mmpa::partitions::{partitions_of, Coloring, Partition};
use mmpa::repr::{mp_act, y_vector, ModuleVector};
use mmpa::smrsk::{smrsk, smrsk_inverse};
use mmpa::srsk::{srsk, SuperTableau};
use mmpa::symfun::{he_expand_oracle, he_expand_tableaux};
use mmpa::tableau::{enumerate_ssmt, enumerate_ssmt_prime, shape_labels, MPTableau};
use mmpa::text::{
    parse_biword, parse_multiset_partition, parse_set_partition, parse_tableau, partition_recs,
    tableau_recs,
};
use mmpa::{Error, Result};

#[derive(Parser)]
#[command(name = "mmpa", version, about = "Exact arithmetic for mixed multiset partition algebras")]
struct Cli {
    /// Output format: the text grammars, or JSON records with a `format: 1` header.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Subcommand)]
enum Command {
    /// Run super RSK insertion on an ordered restricted biword.
    Srsk {
        /// Biword, e.g. `[1 1 ~1 / 1 2 1]`
        biword: String,
    },
    /// Map a restricted multiset partition to its tableau pair.
    Smrsk {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        #[arg(long)]
        n: usize,
        /// Multiset partition, e.g. `[{1,_1},{~1,~_1}]`
        partition: String,
    },
    /// Invert the tableau-pair map.
    SmrskInv {
        /// Insertion tableau
        p: String,
        /// Recording tableau
        q: String,
    },
    /// Multiply two set-partition diagrams in the partition algebra.
    PaMult {
        #[arg(long)]
        r: usize,
        left: String,
        right: String,
    },
    /// Multiply two restricted diagrams in the mixed multiset partition algebra.
    MpMult {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        left: String,
        right: String,
    },
    /// Act by a diagram on a module basis tableau and straighten the result.
    Act {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        diagram: String,
        tableau: String,
    },
    /// Expand a multiset tableau vector in the semistandard basis.
    Straighten {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        tableau: String,
    },
    /// Print the dimension of each simple module at a specialization.
    Dims {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        #[arg(long)]
        n: usize,
    },
    /// Expand a product of h- and e-polynomials into Schur polynomials.
    SchurExpand {
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        e: Option<Vec<usize>>,
        /// Use the polynomial-peeling oracle instead of tableau counting.
        #[arg(long)]
        oracle: bool,
    },
    /// List values of a given kind, one per line.
    Enumerate {
        #[command(subcommand)]
        kind: EnumerateKind,
    },
    /// Run a self-verification suite; failing checks exit 1.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Subcommand)]
enum EnumerateKind {
    /// All diagrams for the profile (`--restricted` keeps the basis ones).
    Diagrams {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        #[arg(long)]
        restricted: bool,
        /// Refuse profiles with more letters than this.
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// Semistandard multiset tableaux of shape (n − |μ|, μ).
    Ssmt {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',')]
        mu: Option<Vec<usize>>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
    /// The singleton-block subclass counting Schur coefficients.
    SsmtPrime {
        #[arg(long, value_delimiter = ',')]
        a: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        b: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        mu: Option<Vec<usize>>,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// |restricted diagrams| = Σ_λ |SSMT(λ)|² per profile.
    SmrskDims {
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Idempotency, closure, embedding, and associativity of the algebra.
    MpAxioms {
        #[arg(long, default_value_t = 2)]
        max: usize,
    },
    /// Tableau-counted h·e expansion against the polynomial oracle.
    HeExpansion {
        #[arg(long, default_value_t = 6)]
        max: usize,
    },
    /// Character-oracle multiplicities against tableau counts.
    SnDecomp {
        #[arg(long, default_value_t = 3)]
        max: usize,
    },
    /// Centralizer dimensions against diagram counts.
    Commutant,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let ok = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("{e}");
            match e {
                Error::ResourceBound(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// A value argument, with `-` meaning stdin.
fn value_arg(s: &str) -> Result<String> {
    if s != "-" {
        return Ok(s.to_string());
    }
    let mut buf = String::new();
    std::io::stdin()
        .read_to_string(&mut buf)
        .map_err(|e| Error::invalid(format!("cannot read stdin: {e}")))?;
    Ok(buf)
}

fn coloring(a: &Option<Vec<usize>>, b: &Option<Vec<usize>>) -> Coloring {
    Coloring::new(a.clone().unwrap_or_default(), b.clone().unwrap_or_default())
}

fn paren_shape(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn fmt_rational(c: &BigRational) -> String {
    if c.denom() == &num::BigInt::from(1) {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn super_tableau_recs(t: &SuperTableau) -> Vec<Vec<Vec<mmpa::text::LetterRec>>> {
    t.rows()
        .iter()
        .map(|row| row.iter().map(mmpa::text::multiset_recs).collect())
        .collect()
}

fn print_tableau_pair(
    format: Format,
    command: &str,
    p: &MPTableau,
    q: &MPTableau,
) {
    match format {
        Format::Text => {
            println!("{p}");
            println!("{q}");
        }
        Format::Records => {
            let doc = json!({
                "format": 1,
                "command": command,
                "insertion": tableau_recs(p),
                "recording": tableau_recs(q),
            });
            println!("{doc}");
        }
    }
}

fn print_pa_element(format: Format, e: &PAElement) {
    match format {
        Format::Text => {
            if e.is_zero() {
                println!("0");
            }
            for (pi, c) in e.terms() {
                println!("{c} * {pi}");
            }
        }
        Format::Records => {
            let terms: Vec<_> = e
                .terms()
                .iter()
                .map(|(pi, c)| {
                    json!({
                        "coeff": c.to_string(),
                        "partition": partition_recs(&MultisetPartition::new(
                            pi.blocks().to_vec(),
                        )),
                    })
                })
                .collect();
            println!("{}", json!({ "format": 1, "command": "pa-mult", "terms": terms }));
        }
    }
}

fn print_mp_element(format: Format, e: &MPElement) {
    match format {
        Format::Text => {
            if e.is_zero() {
                println!("0");
            }
            for (pt, c) in e.terms() {
                println!("{c} * {pt}");
            }
        }
        Format::Records => {
            let terms: Vec<_> = e
                .terms()
                .iter()
                .map(|(pt, c)| json!({ "coeff": c.to_string(), "partition": partition_recs(pt) }))
                .collect();
            println!("{}", json!({ "format": 1, "command": "mp-mult", "terms": terms }));
        }
    }
}

fn print_module_vector(format: Format, command: &str, v: &ModuleVector) {
    match format {
        Format::Text => {
            if v.is_zero() {
                println!("0");
            }
            for (t, c) in v.terms() {
                println!("{} * {t}", fmt_rational(c));
            }
        }
        Format::Records => {
            let terms: Vec<_> = v
                .terms()
                .iter()
                .map(|(t, c)| json!({ "coeff": fmt_rational(c), "tableau": tableau_recs(t) }))
                .collect();
            println!("{}", json!({ "format": 1, "command": command, "terms": terms }));
        }
    }
}

/// Compositions of `total` into positive parts, in generation order.
fn compositions(total: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Like [`compositions`] with every part at most `cap`.
fn compositions_capped(total: usize, cap: usize) -> Vec<Vec<usize>> {
    compositions(total)
        .into_iter()
        .filter(|c| c.iter().all(|&p| p <= cap))
        .collect()
}

fn profile_label(a: &[usize], b: &[usize]) -> String {
    format!("a={} b={}", paren_shape(a), paren_shape(b))
}

/// All profiles (a, b) with |a| + |b| = total.
fn profiles_of_degree(total: usize, cap: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    for r in (0..=total).rev() {
        for a in compositions_capped(r, cap) {
            for b in compositions_capped(total - r, cap) {
                out.push((a.clone(), b));
            }
        }
    }
    out
}

struct VerifyReport {
    checks: usize,
    failures: usize,
}

impl VerifyReport {
    fn new() -> Self {
        VerifyReport { checks: 0, failures: 0 }
    }

    fn record(&mut self, pass: bool, line: String) {
        self.checks += 1;
        if pass {
            println!("pass  {line}");
        } else {
            self.failures += 1;
            println!("FAIL  {line}");
        }
    }

    fn finish(self, suite: &str) -> ExitCode {
        if self.failures == 0 {
            println!("{suite}: all {} checks passed", self.checks);
            ExitCode::SUCCESS
        } else {
            println!("{suite}: {} of {} checks failed", self.failures, self.checks);
            ExitCode::from(1)
        }
    }
}

fn verify_smrsk_dims(max: usize) -> Result<ExitCode> {
    if max > 4 {
        return Err(Error::ResourceBound(format!(
            "smrsk-dims verification up to degree {max} (limit 4)"
        )));
    }
    let mut report = VerifyReport::new();
    for total in 1..=max {
        for (a, b) in profiles_of_degree(total, total) {
            let kappa = Coloring::new(a.clone(), b.clone());
            let diagrams = MultisetPartition::enumerate_restricted(&kappa).len();
            let n = 2 * total;
            let squares: usize = shape_labels(n, total)
                .iter()
                .map(|mu| enumerate_ssmt(n, mu, &kappa).len().pow(2))
                .sum();
            report.record(
                diagrams == squares,
                format!(
                    "{} diagrams={diagrams} tableau-squares={squares}",
                    profile_label(&a, &b)
                ),
            );
        }
    }
    Ok(report.finish("smrsk-dims"))
}

fn verify_mp_axioms(max: usize) -> Result<ExitCode> {
    if max > 4 {
        return Err(Error::ResourceBound(format!(
            "mp-axioms verification up to degree {max} (limit 4)"
        )));
    }
    let mut report = VerifyReport::new();
    for total in 1..=max {
        for (a, b) in profiles_of_degree(total, total) {
            let kappa = Coloring::new(a.clone(), b.clone());
            let label = profile_label(&a, &b);
            let e = idempotent(&kappa)?;
            let ee = pa_multiply(&e, &e)?;
            report.record(ee == e, format!("{label} symmetrizer is idempotent"));

            let diagrams = MultisetPartition::enumerate_restricted(&kappa);
            let elements: Vec<MPElement> = diagrams
                .iter()
                .map(|d| MPElement::basis(d.clone(), kappa.clone()))
                .collect::<Result<_>>()?;
            let mut closed = true;
            let mut embeds = true;
            for u in &elements {
                for v in &elements {
                    let uv = mp_multiply(u, v)?;
                    closed &= uv
                        .terms()
                        .keys()
                        .all(|pt| pt.is_diagram(&kappa) && pt.is_restricted());
                    let lhs = mmpa::algebra::phi(&uv)?;
                    let rhs = pa_multiply(&mmpa::algebra::phi(u)?, &mmpa::algebra::phi(v)?)?;
                    embeds &= lhs == rhs;
                }
            }
            let pairs = elements.len() * elements.len();
            report.record(closed, format!("{label} products stay in the diagram span ({pairs} pairs)"));
            report.record(embeds, format!("{label} embedding is multiplicative ({pairs} pairs)"));

            if total <= 2 {
                let mut assoc = true;
                for u in &elements {
                    for v in &elements {
                        for w in &elements {
                            let l = mp_multiply(&mp_multiply(u, v)?, w)?;
                            let r = mp_multiply(u, &mp_multiply(v, w)?)?;
                            assoc &= l == r;
                        }
                    }
                }
                let triples = elements.len().pow(3);
                report.record(assoc, format!("{label} associativity ({triples} triples)"));
            }
        }
    }
    Ok(report.finish("mp-axioms"))
}

fn verify_he_expansion(max: usize) -> Result<ExitCode> {
    if max > 6 {
        return Err(Error::ResourceBound(format!(
            "h·e verification up to degree {max} (limit 6)"
        )));
    }
    let mut report = VerifyReport::new();
    for total in 1..=max {
        let mut profiles = 0usize;
        let mut matched = true;
        for (a, b) in profiles_of_degree(total, 3) {
            profiles += 1;
            let tab = he_expand_tableaux(&a, &b)?;
            let orc = he_expand_oracle(&a, &b, total)?;
            matched &= tab == orc;
        }
        report.record(
            matched,
            format!("degree {total}: tableau counts match the oracle ({profiles} profiles)"),
        );
    }
    Ok(report.finish("he-expansion"))
}

fn verify_sn_decomp(max: usize) -> Result<ExitCode> {
    if max > 3 {
        return Err(Error::ResourceBound(format!(
            "S_n decomposition verification up to degree {max} (limit 3)"
        )));
    }
    let mut report = VerifyReport::new();
    for total in 1..=max {
        for (a, b) in profiles_of_degree(total, total) {
            let kappa = Coloring::new(a.clone(), b.clone());
            let n = 2 * total;
            let mult = graded_piece_multiplicities(n, &a, &b)?;
            let mut pass = true;
            let mut shapes = 0usize;
            for lambda in partitions_of(n) {
                let count = enumerate_ssmt(n, &lambda[1..], &kappa).len();
                if count > 0 {
                    shapes += 1;
                }
                pass &= mult.get(&lambda).copied().unwrap_or(0) == count;
            }
            report.record(
                pass,
                format!(
                    "{} n={n}: multiplicities match tableau counts ({shapes} shapes)",
                    profile_label(&a, &b)
                ),
            );
        }
    }
    Ok(report.finish("sn-decomp"))
}

fn verify_commutant() -> Result<ExitCode> {
    let mut report = VerifyReport::new();
    let cases: [(usize, Vec<usize>, Vec<usize>); 3] =
        [(4, vec![1], vec![]), (4, vec![], vec![2]), (4, vec![1], vec![1])];
    for (n, a, b) in cases {
        let kappa = Coloring::new(a.clone(), b.clone());
        let expect = MultisetPartition::enumerate_restricted(&kappa).len();
        let got = commutant_dimension(n, &a, &b)?;
        report.record(
            got == expect,
            format!("{} n={n} commutant={got} diagrams={expect}", profile_label(&a, &b)),
        );
    }
    Ok(report.finish("commutant"))
}

fn check_degree(kappa: &Coloring, max_degree: usize) -> Result<()> {
    if kappa.degree() > max_degree {
        return Err(Error::ResourceBound(format!(
            "profile with {} letters (flag --max-degree is {max_degree})",
            kappa.degree()
        )));
    }
    Ok(())
}

fn print_partitions(format: Format, values: &[MultisetPartition]) {
    match format {
        Format::Text => {
            for v in values {
                println!("{v}");
            }
        }
        Format::Records => {
            let recs: Vec<_> = values.iter().map(partition_recs).collect();
            println!(
                "{}",
                json!({ "format": 1, "command": "enumerate", "values": recs })
            );
        }
    }
}

fn print_tableaux(format: Format, values: &[MPTableau]) {
    match format {
        Format::Text => {
            for v in values {
                println!("{v}");
            }
        }
        Format::Records => {
            let recs: Vec<_> = values.iter().map(tableau_recs).collect();
            println!(
                "{}",
                json!({ "format": 1, "command": "enumerate", "values": recs })
            );
        }
    }
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let format = cli.format;
    match &cli.command {
        Command::Srsk { biword } => {
            let w = parse_biword(&value_arg(biword)?)?;
            let (p, q) = srsk(&w);
            match format {
                Format::Text => {
                    println!("{p}");
                    println!("{q}");
                }
                Format::Records => {
                    let doc = json!({
                        "format": 1,
                        "command": "srsk",
                        "insertion": super_tableau_recs(&p),
                        "recording": super_tableau_recs(&q),
                    });
                    println!("{doc}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Smrsk { a, b, n, partition } => {
            let kappa = coloring(a, b);
            let pt = parse_multiset_partition(&value_arg(partition)?)?;
            if !pt.is_diagram(&kappa) {
                return Err(Error::invalid(
                    "the partition is not a two-sided diagram for this profile",
                ));
            }
            let (p, q) = smrsk(&pt, *n)?;
            print_tableau_pair(format, "smrsk", &p, &q);
            Ok(ExitCode::SUCCESS)
        }
        Command::SmrskInv { p, q } => {
            let pt = parse_tableau(&value_arg(p)?)?;
            let qt = parse_tableau(&value_arg(q)?)?;
            let back = smrsk_inverse(&pt, &qt)?;
            match format {
                Format::Text => println!("{back}"),
                Format::Records => {
                    let doc = json!({
                        "format": 1,
                        "command": "smrsk-inv",
                        "partition": partition_recs(&back),
                    });
                    println!("{doc}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::PaMult { r, left, right } => {
            let x = parse_set_partition(&value_arg(left)?)?;
            let y = parse_set_partition(&value_arg(right)?)?;
            let u = PAElement::basis(x, *r)?;
            let v = PAElement::basis(y, *r)?;
            print_pa_element(format, &pa_multiply(&u, &v)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::MpMult { a, b, left, right } => {
            let kappa = coloring(a, b);
            let x = parse_multiset_partition(&value_arg(left)?)?;
            let y = parse_multiset_partition(&value_arg(right)?)?;
            let u = MPElement::basis(x, kappa.clone())?;
            let v = MPElement::basis(y, kappa)?;
            print_mp_element(format, &mp_multiply(&u, &v)?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Act { a, b, diagram, tableau } => {
            let kappa = coloring(a, b);
            let d = MPElement::basis(
                parse_multiset_partition(&value_arg(diagram)?)?,
                kappa,
            )?;
            let t = parse_tableau(&value_arg(tableau)?)?;
            let out = mp_act(&d, &ModuleVector::basis(t))?;
            print_module_vector(format, "act", &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Straighten { a, b, tableau } => {
            let kappa = coloring(a, b);
            let t = parse_tableau(&value_arg(tableau)?)?;
            let out = y_vector(&t, &kappa)?;
            print_module_vector(format, "straighten", &out);
            Ok(ExitCode::SUCCESS)
        }
        Command::Dims { a, b, n } => {
            let kappa = coloring(a, b);
            check_degree(&kappa, 6)?;
            if *n > 16 {
                return Err(Error::ResourceBound(format!(
                    "dimension table at n = {n} (limit 16)"
                )));
            }
            let mut rows: Vec<(Partition, usize)> = Vec::new();
            for mu in shape_labels(*n, kappa.degree().min(*n)) {
                let dim = enumerate_ssmt(*n, &mu, &kappa).len();
                if dim > 0 {
                    let mut lambda = vec![n - mu.iter().sum::<usize>()];
                    lambda.extend_from_slice(&mu);
                    rows.push((lambda, dim));
                }
            }
            match format {
                Format::Text => {
                    for (lambda, dim) in &rows {
                        println!("{} {dim}", paren_shape(lambda));
                    }
                }
                Format::Records => {
                    let recs: Vec<_> = rows
                        .iter()
                        .map(|(lambda, dim)| json!({ "lambda": lambda, "dim": dim }))
                        .collect();
                    println!(
                        "{}",
                        json!({ "format": 1, "command": "dims", "n": n, "modules": recs })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SchurExpand { h, e, oracle } => {
            let a = h.clone().unwrap_or_default();
            let b = e.clone().unwrap_or_default();
            let expansion = if *oracle {
                let degree: usize = a.iter().sum::<usize>() + b.iter().sum::<usize>();
                he_expand_oracle(&a, &b, degree.max(1))?
            } else {
                he_expand_tableaux(&a, &b)?
            };
            match format {
                Format::Text => {
                    for (lambda, coeff) in expansion.sorted_terms() {
                        println!("{coeff} {}", paren_shape(lambda));
                    }
                }
                Format::Records => {
                    let terms: Vec<_> = expansion
                        .sorted_terms()
                        .iter()
                        .map(|(lambda, coeff)| json!({ "coeff": coeff, "lambda": lambda }))
                        .collect();
                    println!(
                        "{}",
                        json!({ "format": 1, "command": "schur-expand", "terms": terms })
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { kind } => {
            match kind {
                EnumerateKind::Diagrams { a, b, restricted, max_degree } => {
                    let kappa = coloring(a, b);
                    check_degree(&kappa, *max_degree)?;
                    let values = if *restricted {
                        MultisetPartition::enumerate_restricted(&kappa)
                    } else {
                        MultisetPartition::enumerate_diagrams(&kappa)
                    };
                    print_partitions(format, &values);
                }
                EnumerateKind::Ssmt { a, b, n, mu, max_degree } => {
                    let kappa = coloring(a, b);
                    check_degree(&kappa, *max_degree)?;
                    let mu = mu.clone().unwrap_or_default();
                    print_tableaux(format, &enumerate_ssmt(*n, &mu, &kappa));
                }
                EnumerateKind::SsmtPrime { a, b, mu, max_degree } => {
                    let kappa = coloring(a, b);
                    check_degree(&kappa, *max_degree)?;
                    let mu = mu.clone().unwrap_or_default();
                    print_tableaux(
                        format,
                        &enumerate_ssmt_prime(kappa.degree(), &mu, &kappa),
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite } => match suite {
            VerifySuite::SmrskDims { max } => verify_smrsk_dims(*max),
            VerifySuite::MpAxioms { max } => verify_mp_axioms(*max),
            VerifySuite::HeExpansion { max } => verify_he_expansion(*max),
            VerifySuite::SnDecomp { max } => verify_sn_decomp(*max),
            VerifySuite::Commutant => verify_commutant(),
        },
    }
}
