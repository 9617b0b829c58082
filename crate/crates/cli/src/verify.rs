//! Table and lemma checks behind `grrforge verify`.

use std::fmt::Write as _;

use grrforge::classical::{Family, GroupSpec};
use grrforge::numthy;
use grrforge::perm::{count_involutions, normalizer_order_bruteforce, Caps, PermGroup};
use grrforge::Result;
use num_bigint::{BigInt, BigUint};

/// A rendered report and whether every row met the expectation.
pub struct Report {
    pub text: String,
    pub passed: bool,
}

pub fn lemma8(max_n: u64) -> Result<Report> {
    let rows = numthy::verify_lemma8(max_n)?;
    let mut text = String::from("n\t(n+2)! < 2^(n²/4−n/8+8)\t(n+2)! < 3^(n²/4−5n/8+4)\n");
    for r in &rows {
        let _ = writeln!(text, "{}\t{}\t{}", r.n, r.base2, r.base3);
    }
    let failures = rows.iter().filter(|r| !r.passed()).count();
    let _ = writeln!(text, "checked n = 7..={max_n}: {failures} failures");
    Ok(Report {
        text,
        passed: failures == 0,
    })
}

pub fn lemma10(max_n: u64, all_rows: bool) -> Result<Report> {
    let rows = numthy::verify_lemma10(max_n)?;
    let mut text = String::from("n\t|π(n)|\tlog2(n)\tok\n");
    for r in rows.iter().filter(|r| all_rows || !r.passed) {
        let _ = writeln!(
            text,
            "{}\t{}\t{:.4}\t{}",
            r.n, r.distinct_primes, r.log2_n, r.passed
        );
    }
    let failures = rows.iter().filter(|r| !r.passed).count();
    let _ = writeln!(text, "checked n = 2..={max_n}: {failures} failures");
    Ok(Report {
        text,
        passed: failures == 0,
    })
}

pub fn lemma9(num: u64, den: u64, pairs: &[(u64, u64)]) -> Result<Report> {
    let results = numthy::lemma9_probe(num, den, pairs)?;
    let mut text = format!("s = {num}/{den}\nq\tn\tn^(log2 n) < q^(s n)\n");
    for ((q, n), ok) in pairs.iter().zip(&results) {
        let _ = writeln!(text, "{q}\t{n}\t{ok}");
    }
    Ok(Report { text, passed: true })
}

pub fn zsigmondy(a_max: u64, m_max: u32) -> Result<Report> {
    let found = numthy::zsigmondy_scan(a_max, m_max)?;
    let mut text =
        format!("pairs (a, m) with 2 <= a <= {a_max}, 3 <= m <= {m_max} and ppd(a, m) empty:\n");
    for (a, m) in &found {
        let _ = writeln!(text, "({a}, {m})");
    }
    if found.is_empty() {
        text.push_str("none\n");
    }
    let passed = found.iter().all(|&p| p == (2, 6));
    Ok(Report { text, passed })
}

/// The enumerable groups used for the exhaustive table checks.
pub fn default_specs() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for q in [4, 5, 7, 8, 9, 11, 13] {
        out.push((Family::Psl, 2, q));
    }
    out.extend([
        (Family::Psl, 3, 2),
        (Family::Psl, 3, 3),
        (Family::Psl, 4, 2),
        (Family::Psu, 3, 3),
        (Family::Psu, 4, 2),
        (Family::Psp, 4, 3),
        (Family::Psp, 6, 2),
    ]);
    out.into_iter()
        .map(|(f, n, q)| GroupSpec::new(f, n, q).expect("valid default spec"))
        .collect()
}

/// Exhaustive involution counts against `i(G) ≤ i₂(G)` (table 2) or
/// `i₂(G) < j(G)` (table 5).
pub fn involution_table(specs: &[GroupSpec], caps: Caps, upper: bool) -> Result<Report> {
    let mut text = if upper {
        String::from("group\t|G|\ti2(G)\tj(G)\ti2(G) < j(G)\n")
    } else {
        String::from("group\t|G|\ti2(G)\ti(G)\ti2(G) >= i(G)\n")
    };
    let mut passed = true;
    for spec in specs {
        let order = spec.group_order();
        if order > BigUint::from(caps.enumeration) {
            let _ = writeln!(
                text,
                "{spec}\t{order}\tskipped: order above the enumeration cap"
            );
            continue;
        }
        let group = PermGroup::with_caps(spec, caps)?;
        let i2 = count_involutions(&*group.enumerate()?);
        let (bound, ok) = if upper {
            let j = spec.involution_upper_bound_aut();
            let ok = BigUint::from(i2) < j;
            (j.to_string(), ok)
        } else {
            let i = spec.involution_lower_bound();
            let ok = num_rational::BigRational::from_integer(BigInt::from(i2)) >= i;
            (i.to_string(), ok)
        };
        passed &= ok;
        let _ = writeln!(text, "{spec}\t{order}\t{i2}\t{bound}\t{ok}");
    }
    Ok(Report { text, passed })
}

/// The `(group, r)` cases checked for the normalizer formula by default.
pub fn default_normalizer_cases() -> Vec<(GroupSpec, u128)> {
    [
        (Family::Psl, 2, 4, 5),
        (Family::Psl, 2, 5, 3),
        (Family::Psl, 3, 3, 13),
        (Family::Psu, 3, 3, 7),
        (Family::Psp, 4, 3, 5),
    ]
    .into_iter()
    .map(|(f, n, q, r)| (GroupSpec::new(f, n, q).expect("valid default spec"), r))
    .collect()
}

/// Brute-force `|N_G(⟨x⟩)|` for the first `x` of order `r` in the
/// enumeration, against the closed form.
pub fn normalizer_table(cases: &[(GroupSpec, u128)], caps: Caps) -> Result<Report> {
    let mut text = String::from("group\tr\tbrute force\tformula\tequal\n");
    let mut passed = true;
    for (spec, r) in cases {
        let formula = spec.normalizer_order_formula()?;
        let group = PermGroup::with_caps(spec, caps)?;
        let all = group.enumerate()?;
        let Some(x) = all.elements().iter().find(|g| u128::from(g.order()) == *r) else {
            let _ = writeln!(
                text,
                "{spec}\t{r}\tno element of order {r}\t{formula}\tfalse"
            );
            passed = false;
            continue;
        };
        let brute = normalizer_order_bruteforce(&all, x);
        let ok = BigUint::from(brute) == formula;
        passed &= ok;
        let _ = writeln!(text, "{spec}\t{r}\t{brute}\t{formula}\t{ok}");
    }
    Ok(Report { text, passed })
}
