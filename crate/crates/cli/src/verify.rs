//! The one-shot verification suite behind `gw verify`: every ledger value,
//! every cross-method equality, and the property sweeps, each reported as a
//! single PASS/FAIL line.

use gw_core::arith::{binomial, factorial, Integer};
use gw_core::kontsevich::{self, NdTable};
use gw_core::partitions::partitions_of_weight;
use gw_core::quantum;
use gw_core::severi::{self, AuxProvider, AuxTable, Layered};

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn ensure(ok: bool, detail: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail.to_string())
    }
}

fn closed_form_table(d: u32) -> NdTable {
    let mut t = NdTable::new();
    kontsevich::n_d(d, &mut t).expect("d >= 1");
    t
}

fn check_kontsevich_values() -> Result<(), String> {
    let table = closed_form_table(4);
    ensure(table.entry(1) == &int(1), "n_1 != 1")?;
    ensure(table.entry(3) == &int(12), "n_3 != 12")?;
    ensure(table.entry(4) == &int(620), "n_4 != 620")?;
    let f = kontsevich::f_sum(4, &table).map_err(|e| e.to_string())?;
    let g = kontsevich::g_sum(4, &table).map_err(|e| e.to_string())?;
    ensure(f == int(2228), "f(4) != 2228")?;
    ensure(g == int(2848), "g(4) != 2848")?;
    let f_parts = kontsevich::f_summands(4, &table).map_err(|e| e.to_string())?;
    ensure(
        f_parts == vec![int(1008), int(896), int(324)],
        "f(4) summands are not 1008/896/324",
    )?;
    let g_parts = kontsevich::g_summands(4, &table).map_err(|e| e.to_string())?;
    ensure(
        g_parts == vec![int(864), int(1120), int(864)],
        "g(4) summands are not 864/1120/864",
    )
}

fn check_oracle_equivalence(max: u32) -> Result<(), String> {
    let closed = closed_form_table(max);
    let wdvv = quantum::n_d_via_wdvv(max);
    for d in 2..=max {
        if closed.entry(d) != wdvv.entry(d) {
            return Err(format!(
                "n_{d}: closed form {} vs four-point {}",
                closed.entry(d),
                wdvv.entry(d)
            ));
        }
    }
    Ok(())
}

fn check_wdvv_symmetry(max: u32) -> Result<(), String> {
    let table = closed_form_table(max);
    for (d, residual) in quantum::wdvv_residuals(max, &table) {
        if residual != int(0) {
            return Err(format!("residual {residual} at d={d}"));
        }
    }
    // sensitivity: a corrupted entry must break some residual
    let mut corrupted = table.clone();
    corrupted.set(3, int(13));
    ensure(
        quantum::wdvv_residuals(max, &corrupted)
            .into_iter()
            .any(|(_, r)| r != int(0)),
        "corrupting n_3 left every residual zero",
    )
}

fn check_quartic_ledger(provider: &dyn AuxProvider) -> Result<(), String> {
    let total = severi::formula5(4, 3, provider).map_err(|e| e.to_string())?;
    ensure(total == int(675), &format!("N_{{4,3}} = {total}, expected 675"))?;

    let ledger = severi::quartic_components().map_err(|e| e.to_string())?;
    let expected: Vec<(&str, i64)> = vec![
        ("A", 15),
        ("B", 147),
        ("C", 180),
        ("D", 10),
        ("E", 200),
        ("F", 60),
        ("G", 63),
    ];
    for (label, value) in expected {
        if ledger.value(label) != Some(&int(value)) {
            return Err(format!("component {label} != {value}"));
        }
    }
    let irreducible = severi::irreducible_rational_quartics().map_err(|e| e.to_string())?;
    ensure(irreducible == int(620), "irreducible quartics != 620")?;
    ensure(
        &irreducible == closed_form_table(4).entry(4),
        "irreducible quartics disagree with n_4",
    )
}

fn check_roberts_telescoping() -> Result<(), String> {
    ensure(
        severi::roberts_closed(3).map_err(|e| e.to_string())? == int(21),
        "N_{3,2} != 21",
    )?;
    for d in 4..=50u32 {
        let ledger = severi::delta2_components(d).map_err(|e| e.to_string())?;
        let b_to_g: Integer = ledger.entries[1..].iter().map(|e| e.value.clone()).sum();
        let difference = severi::delta2_difference(d).map_err(|e| e.to_string())?;
        if b_to_g != difference {
            return Err(format!("component sum misses the difference polynomial at d={d}"));
        }
        let telescoped = severi::roberts_closed(d).map_err(|e| e.to_string())?
            - severi::roberts_closed(d - 1).map_err(|e| e.to_string())?;
        if telescoped != difference {
            return Err(format!("telescoping fails at d={d}"));
        }
        // the rejected variant (quadratic coefficient 9 in the last
        // component) must NOT telescope wherever the two differ
        if d >= 5 {
            let b_to_f: Integer = ledger.entries[1..6].iter().map(|e| e.value.clone()).sum();
            let x = Integer::from(d);
            let g_variant = Integer::from(9) * x.pow(2) - Integer::from(56) * &x + int(96);
            if b_to_f + g_variant == difference {
                return Err(format!("the 9d^2 variant unexpectedly telescopes at d={d}"));
            }
        }
    }
    Ok(())
}

fn check_placement_cap(provider: &dyn AuxProvider) -> Result<(), String> {
    ensure(
        severi::ruling_placements(1, 1, 0, 5) == int(1),
        "capped placement(1,1,0,5) != 1",
    )?;
    ensure(
        severi::ruling_placements_uncapped(1, 1, 0, 5) == int(6),
        "uncapped placement(1,1,0,5) != 6",
    )?;
    let terms = severi::formula5_terms(4, 3, provider).map_err(|e| e.to_string())?;
    let capped = terms
        .iter()
        .find(|t| t.placement == int(1) && t.delta1 == 1 && t.aux_value == int(10))
        .ok_or("the capped tangency term is missing")?;
    ensure(capped.product == int(40), "the capped tangency term is not 40")
}

fn check_property_suites() -> Result<(), String> {
    fn count_nonincreasing(w: u32, max_part: u32) -> u64 {
        if w == 0 {
            return 1;
        }
        (1..=max_part.min(w))
            .map(|part| count_nonincreasing(w - part, part))
            .sum()
    }
    for w in 0..=20u32 {
        if partitions_of_weight(w).len() as u64 != count_nonincreasing(w, w) {
            return Err(format!("partition count disagrees with brute force at w={w}"));
        }
    }
    for w in 0..=10u32 {
        for sup in partitions_of_weight(w) {
            for sub in sup.subpartitions() {
                let comp = sup.complement(&sub).map_err(|e| e.to_string())?;
                if comp.weight() != sup.weight() - sub.weight()
                    || comp.size() != sup.size() - sub.size()
                    || sub.mult_m() * comp.mult_m() != sup.mult_m()
                {
                    return Err(format!("complement identity fails for {sub} <= {sup}"));
                }
            }
        }
    }
    for fixed_simple in 0..=8u32 {
        for delta1 in 0..=8u32 {
            for free_simple in delta1..=8u32 {
                for interior in 0..=8u32 {
                    if severi::ruling_placements(fixed_simple, delta1, free_simple, interior)
                        != binomial((fixed_simple + interior) as u64, delta1 as i64)
                    {
                        return Err(format!(
                            "Vandermonde degeneration fails at ({fixed_simple},{delta1},{free_simple},{interior})"
                        ));
                    }
                }
            }
        }
    }
    for n in 0..=25u64 {
        for k in 0..=n {
            if binomial(n, k as i64) != factorial(n) / (factorial(k) * factorial(n - k)) {
                return Err(format!("binomial({n},{k}) disagrees with the factorial oracle"));
            }
        }
    }
    Ok(())
}

/// Runs every check, printing one PASS/FAIL line each; returns overall success.
pub fn run(max: u32, corrupt_aux: bool) -> bool {
    let base = severi::paper_aux();
    let corruption = AuxTable::from_json_str(
        r#"[{"e": 3, "delta": 1, "fixed": [2], "free": [1], "value": "13"}]"#,
    )
    .expect("the corruption table parses");
    let layered = Layered { primary: &corruption, fallback: &base };
    let provider: &dyn AuxProvider = if corrupt_aux { &layered } else { &base };

    let checks: Vec<(String, Result<(), String>)> = vec![
        ("kontsevich-values".to_string(), check_kontsevich_values()),
        (
            format!("oracle-equivalence (2 <= d <= {max})"),
            check_oracle_equivalence(max),
        ),
        (
            format!("wdvv-symmetry (2 <= d <= {max})"),
            check_wdvv_symmetry(max),
        ),
        ("quartic-ledger".to_string(), check_quartic_ledger(provider)),
        ("roberts-telescoping".to_string(), check_roberts_telescoping()),
        ("placement-cap".to_string(), check_placement_cap(provider)),
        ("property-suites".to_string(), check_property_suites()),
    ];

    let mut all_ok = true;
    for (name, outcome) in checks {
        match outcome {
            Ok(()) => println!("PASS {name}"),
            Err(detail) => {
                all_ok = false;
                println!("FAIL {name}: {detail}");
            }
        }
    }
    all_ok
}
