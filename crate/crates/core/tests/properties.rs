mod common;

use birack_core::labeling::{brute_force_labelings, enumerate_labelings, DEFAULT_BRUTE_FORCE_CAP};
use birack_core::library::{builtins, corpus};
use birack_core::{BirackTable, Diagram};
use common::*;
use proptest::prelude::*;

fn small_tables() -> Vec<birack_core::Birack> {
    let mut tables = census_tables(3);
    tables.extend([table3(), table4()]);
    tables
}

#[test]
fn kink_map_and_good_involutions() {
    let tables: Vec<_> = census_tables(3).into_iter().chain(constructor_tables()).collect();
    assert!(tables.len() > 300);
    all(&tables, structural_properties).unwrap();
}

#[test]
fn propagation_matches_brute_force_on_corpus() {
    let corpus = corpus();
    for b in [table3(), table4()] {
        for d in &corpus {
            assert_eq!(
                enumerate_labelings(d, &b),
                brute_force_labelings(d, &b, DEFAULT_BRUTE_FORCE_CAP).unwrap(),
                "{}",
                d.name()
            );
        }
    }
}

#[test]
fn enhancement_laws_on_builtins() {
    let ds = builtins();
    all(&small_tables(), |b| all(&ds, |d| enhancement_laws(b, d))).unwrap();
}

#[test]
fn fixed_point_free_involutions_occur() {
    let found = census_tables(2)
        .iter()
        .any(|b| b.enumerate_good_involutions().iter().any(|r| r.fixed_points() == 0));
    assert!(found);
}

#[test]
fn kink_laws_on_builtins() {
    let ds = builtins();
    all(&small_tables(), |b| all(&ds, |d| kink_laws(b, d))).unwrap();
}

#[test]
fn orientation_robustness() {
    let ds = corpus();
    all(&small_tables(), |b| all(&ds, |d| orientation_law(b, d))).unwrap();
}

#[test]
fn move_pairs_have_equal_counts() {
    let pairs = move_pairs();
    all(&small_tables(), |b| move_invariance(b, &pairs)).unwrap();
}

#[test]
fn braid_closures_are_well_formed() {
    use common::Gen::*;
    let trefoil = braid_closure("t", 2, &[Under(0), Under(0), Under(0)]);
    assert_eq!(trefoil.component_count(), 1);
    assert_eq!(trefoil.crossing_count(), 3);
    let unlink = braid_closure("u", 3, &[]);
    assert_eq!(unlink.component_count(), 3);
    let hopf = braid_closure("h", 2, &[Virt(0), Over(0)]);
    assert_eq!(hopf.component_count(), 2);
    // the trefoil closure matches the builtin count on the order-3 table
    let b = table3();
    let builtin = birack_core::library::builtin("trefoil").unwrap();
    assert_eq!(
        birack_core::labeling::count_labelings(&trefoil, &b),
        birack_core::labeling::count_labelings(&builtin, &b)
    );
}

fn arb_table() -> impl Strategy<Value = BirackTable> {
    (1usize..=4).prop_flat_map(|n| {
        prop::collection::vec(0..n, 3 * n * n).prop_map(move |v| {
            let (u, rest) = v.split_at(n * n);
            let (o, w) = rest.split_at(n * n);
            BirackTable::from_blocks(n, u.to_vec(), o.to_vec(), w.to_vec()).unwrap()
        })
    })
}

fn arb_word() -> impl Strategy<Value = Vec<Gen>> {
    prop::collection::vec(
        (0usize..3, 0usize..2).prop_map(|(kind, i)| match kind {
            0 => Gen::Over(i),
            1 => Gen::Under(i),
            _ => Gen::Virt(i),
        }),
        0..6,
    )
}

proptest! {
    #[test]
    fn table_text_round_trip(t in arb_table()) {
        prop_assert_eq!(BirackTable::parse_matrix(&t.to_matrix_string()).unwrap(), t);
    }

    #[test]
    fn diagram_text_round_trip(word in arb_word()) {
        let d = braid_closure("", 3, &word);
        prop_assert_eq!(Diagram::parse(&d.to_text()).unwrap(), d);
    }

    #[test]
    fn random_braids_match_brute_force(word in arb_word(), k in 0usize..2) {
        let d = braid_closure("", 3, &word);
        let b = if k == 0 { table3() } else { table4() };
        prop_assert_eq!(enumerate_labelings(&d, &b), brute_force_labelings(&d, &b, DEFAULT_BRUTE_FORCE_CAP).unwrap());
        prop_assert!(enhancement_laws(&b, &d).is_ok());
        prop_assert!(orientation_law(&b, &d).is_ok());
    }
}
