//! Acceptance criteria, one line each. Run with
//! `cargo test -p liebranch --test acceptance`.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use liebranch::app::{compare_branching_row, compare_tensor_row, embedding_checks, run, Context, MatrixChoice};
use liebranch::fixtures;
use liebranch_core::dioph::count_partitions;
use liebranch_core::embed::{derive_projection_by_weight_matching, projections_equivalent};
use liebranch_core::repcore::{dimension_from_character, freudenthal_multiplicities, full_weight_system, weyl_dimension};
use liebranch_core::tensorprod::tensor_decompose;
use liebranch_core::{AlgebraType, Decomposition, RepCache, RootSystem, Weight};
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

const TABLE1_LIMIT: Duration = Duration::from_secs(60);
const TABLE2_LIMIT: Duration = Duration::from_secs(30);
const DIM_LIMIT: Duration = Duration::from_secs(5);
const EMBEDDING_LIMIT: Duration = Duration::from_secs(600);
const DIOPH_LIMIT: Duration = Duration::from_secs(1);

type Outcome = Result<String, String>;
type Criterion = (&'static str, Box<dyn FnOnce() -> Outcome>);

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let elapsed = start.elapsed();
    if elapsed > limit {
        return Err(format!("{} but took {:.2?} (limit {:?})", detail, elapsed, limit));
    }
    Ok(format!("{} in {:.2?}", detail, elapsed))
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn rs(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<AlgebraType>().unwrap()).unwrap()
}

fn branching_table() -> Outcome {
    let mut ctx = Context::new().map_err(|e| e.to_string())?;
    let rows = fixtures::branching_table();
    for row in &rows {
        let r = compare_branching_row(&mut ctx, row, MatrixChoice::Derived).map_err(|e| e.to_string())?;
        ensure(r.matches, format!("[{}]: {}", r.label, r.note))?;
    }
    Ok(format!("{} rows exact", rows.len()))
}

fn tensor_table() -> Outcome {
    let mut ctx = Context::new().map_err(|e| e.to_string())?;
    let rows = fixtures::tensor_table();
    let mut dims = Vec::new();
    for row in &rows {
        let r = compare_tensor_row(&mut ctx, row).map_err(|e| e.to_string())?;
        ensure(r.matches, format!("{}: {}", r.label, r.note))?;
        dims.push(r.document.dimension.to_string());
    }
    ensure(dims == ["3136", "86184", "89376", "175616"], format!("dimensions {:?}", dims))?;
    Ok(format!("{} rows exact, dimensions {}", rows.len(), dims.join("/")))
}

fn cli_stdout(args: &[&str]) -> Result<String, String> {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(std::iter::once("liebranch").chain(args.iter().copied()), &mut out, &mut err);
    if code != 0 {
        return Err(format!("{:?} exited {}: {}", args, code, String::from_utf8_lossy(&err)));
    }
    Ok(String::from_utf8(out).unwrap())
}

fn dimensions() -> Outcome {
    let mut c28 = BTreeMap::new();
    let mut e7 = BTreeMap::new();
    for row in fixtures::branching_table() {
        c28.insert(row.highest_weight.to_string(), row.dimension.to_string());
        for (hw, dim, _) in row.constituents {
            e7.insert(hw.to_string(), dim.to_string());
        }
    }
    for (algebra, table) in [("C28", &c28), ("E7", &e7)] {
        for (hw, dim) in table {
            let got = cli_stdout(&["dim", algebra, hw])?;
            ensure(got.trim() == dim, format!("dim {} {} = {}, expected {}", algebra, hw, got.trim(), dim))?;
        }
    }
    ensure(e7.len() == 14 && c28.len() == 8, format!("{} E7 and {} C28 weights", e7.len(), c28.len()))?;
    Ok(format!("{} E7 and {} C28 dimensions", e7.len(), c28.len()))
}

fn embedding() -> Outcome {
    let mut ctx = Context::new().map_err(|e| e.to_string())?;
    let (checks, (rep, form)) = embedding_checks(&mut ctx).map_err(|e| e.to_string())?;
    for c in &checks {
        ensure(c.passed, format!("{} ({})", c.name, c.detail))?;
    }
    ensure(rep.dim() == 56, "module is not 56-dimensional")?;
    ensure(form.solution_dim() == 1, format!("form space has dimension {}", form.solution_dim()))?;
    ensure(form.rank() == 56, format!("form rank {}", form.rank()))?;
    Ok(format!("{} checks, form space dim 1, rank 56", checks.len()))
}

fn matrices_agree() -> Outcome {
    let c28 = rs("C28");
    let e7 = rs("E7");
    let derived = derive_projection_by_weight_matching(&c28, &e7).map_err(|e| e.to_string())?;
    let published = fixtures::published_projection_matrix();
    published
        .check_defining_image(&c28, &e7, &Weight::fundamental(7, 7))
        .map_err(|e| format!("published matrix: {}", e))?;
    let hws: Vec<Weight> = fixtures::branching_table().into_iter().map(|r| r.highest_weight).collect();
    let same = projections_equivalent(&c28, &e7, &derived, &published, &hws, &mut RepCache::new()).map_err(|e| e.to_string())?;
    ensure(same, "branchings differ")?;
    let entrywise = if derived == published { "identical" } else { "different" };
    Ok(format!("identical branchings on {} weights; matrices entrywise {}", hws.len(), entrywise))
}

fn diophantine() -> Outcome {
    let three = count_partitions(1596, &[56, 133, 912, 1463, 1539]).map_err(|e| e.to_string())?;
    let with_one = count_partitions(1596, &[1, 56, 133, 912, 1463, 1539]).map_err(|e| e.to_string())?;
    ensure(three == BigUint::from(3u32), format!("got {}", three))?;
    ensure(with_one == BigUint::from(240u32), format!("got {}", with_one))?;
    Ok("3 and 240".into())
}

fn brute_force_product(r: &RootSystem, a: &Weight, b: &Weight) -> Decomposition {
    let fa = full_weight_system(r, a).unwrap();
    let fb = full_weight_system(r, b).unwrap();
    let mut product: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (x, mx) in fa.iter() {
        for (y, my) in fb.iter() {
            *product.entry(x + y).or_default() += BigInt::from(mx * my);
        }
    }
    let mut out = Decomposition::new(r.rank());
    loop {
        product.retain(|_, m| !m.is_zero());
        let Some(top) = product.keys().max_by_key(|k| r.level(k)).cloned() else {
            return out;
        };
        let m = product[&top].clone();
        assert!(m.is_positive() && top.is_dominant());
        for (x, mx) in full_weight_system(r, &top).unwrap().iter() {
            *product.entry(x.clone()).or_default() -= &m * BigInt::from(mx.clone());
        }
        out.add(top, &m.to_biguint().unwrap());
    }
}

fn properties() -> Outcome {
    let mut notes = Vec::new();
    let mut runner = TestRunner::new(Config {
        cases: 256,
        failure_persistence: None,
        ..Config::default()
    });

    // dimension-sum conservation
    let mut cache = RepCache::new();
    for (name, hws) in [
        ("C28", fixtures::branching_table().into_iter().map(|r| r.highest_weight).collect::<Vec<_>>()),
        (
            "E7",
            fixtures::branching_table()
                .into_iter()
                .flat_map(|r| r.constituents.into_iter().map(|c| c.0))
                .collect(),
        ),
    ] {
        let r = rs(name);
        for hw in hws {
            let ch = cache.dominant_character(&r, &hw).unwrap();
            ensure(
                dimension_from_character(&r, &ch) == weyl_dimension(&r, &hw).unwrap(),
                format!("dimension sum of {} {}", name, hw),
            )?;
        }
    }
    let strategy = prop_oneof![
        prop::collection::vec(0..=3i32, 2).prop_map(|l| ("G2", l)),
        prop::collection::vec(0..=3i32, 3).prop_map(|l| ("C3", l)),
        prop::collection::vec(0..=1i32, 7).prop_map(|l| ("E7", l)),
    ];
    runner
        .run(&strategy, |(name, labels)| {
            let r = rs(name);
            let hw = Weight::new(labels);
            prop_assume!(weyl_dimension(&r, &hw).unwrap() < BigUint::from(200_000u32));
            let ch = freudenthal_multiplicities(&r, &hw).unwrap();
            prop_assert_eq!(dimension_from_character(&r, &ch), weyl_dimension(&r, &hw).unwrap());
            Ok(())
        })
        .map_err(|e| format!("dimension sum: {}", e))?;
    notes.push("dimension sums");

    // Klimyk against brute-force character multiplication, every pair with labels <= 2
    for name in ["A2", "C2"] {
        let r = rs(name);
        let labels: Vec<Weight> = (0..=2).flat_map(|a| (0..=2).map(move |b| Weight::new(vec![a, b]))).collect();
        let mut cache = RepCache::new();
        for a in &labels {
            for b in &labels {
                let fast = tensor_decompose(&r, a, b, &mut cache).unwrap();
                ensure(fast == brute_force_product(&r, a, b), format!("{}: [{}] x [{}]", name, a, b))?;
            }
        }
    }
    notes.push("Klimyk = brute force on A2, C2");

    // reflections and straightening on random weights
    let strategy = prop_oneof![
        prop::collection::vec(-6..=6i32, 2).prop_map(|l| ("A2", l)),
        prop::collection::vec(-6..=6i32, 2).prop_map(|l| ("G2", l)),
        prop::collection::vec(-4..=4i32, 4).prop_map(|l| ("F4", l)),
        prop::collection::vec(-3..=3i32, 7).prop_map(|l| ("E7", l)),
        prop::collection::vec(-2..=2i32, 28).prop_map(|l| ("C28", l)),
    ];
    runner
        .run(&(strategy, 0usize..28), |((name, labels), i)| {
            let r = rs(name);
            let w = Weight::new(labels);
            let i = i % r.rank() + 1;
            prop_assert_eq!(r.reflect(&r.reflect(&w, i).unwrap(), i).unwrap(), w.clone());
            let (d, sign) = r.to_dominant_signed(&w);
            prop_assert!(d.is_dominant());
            prop_assert!(sign == 1 || sign == -1);
            prop_assert_eq!(r.to_dominant(&r.reflect(&w, i).unwrap()), d);
            Ok(())
        })
        .map_err(|e| format!("reflections: {}", e))?;
    notes.push("reflect involution, dominance");

    for name in ["A2", "C3", "E7"] {
        let r = rs(name);
        let ch = freudenthal_multiplicities(&r, r.highest_root().labels()).unwrap();
        let zero = ch.multiplicity(&Weight::zero(r.rank()));
        ensure(zero == BigUint::from(r.rank()), format!("{} adjoint zero weight has multiplicity {}", name, zero))?;
    }
    notes.push("adjoint zero weight = rank");
    Ok(notes.join(", "))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 branching table", Box::new(|| timed(TABLE1_LIMIT, branching_table))),
        ("2 tensor product table", Box::new(|| timed(TABLE2_LIMIT, tensor_table))),
        ("3 dimensions", Box::new(|| timed(DIM_LIMIT, dimensions))),
        ("4 embedding verification", Box::new(|| timed(EMBEDDING_LIMIT, embedding))),
        ("5 derived vs published projection", Box::new(matrices_agree)),
        ("6 diophantine counts", Box::new(|| timed(DIOPH_LIMIT, diophantine))),
        ("7 property suites", Box::new(properties)),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        match f() {
            Ok(detail) => println!("PASS criterion {}: {}", name, detail),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {}", name, detail);
            }
        }
    }
    println!("acceptance: {} of 7 criteria passed", 7 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
