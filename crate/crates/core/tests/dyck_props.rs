use deltacat::dyck::{enumerate_decorations, enumerate_paths, DecoratedPath, DyckPath, MultiPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn path() -> impl Strategy<Value = DyckPath> {
    prop::collection::vec(0u32..3, 0..12).prop_map(|steps| {
        let mut seq = Vec::with_capacity(steps.len());
        let mut cur = 0u32;
        for (i, s) in steps.into_iter().enumerate() {
            // s = 0 climbs, otherwise fall back by up to s
            cur = if i == 0 { 0 } else if s == 0 { cur + 1 } else { cur.saturating_sub(s - 1) };
            seq.push(cur);
        }
        DyckPath::new(seq).expect("valid area sequence")
    })
}

fn decorated() -> impl Strategy<Value = DecoratedPath> {
    (path(), any::<u64>()).prop_map(|(p, bits)| {
        let n = p.len();
        let first = p.reading_order().first();
        let rows: Vec<usize> = (0..n).filter(|&r| bits >> r & 1 == 1 && Some(r) != first).collect();
        DecoratedPath::new(p, &rows).expect("allowed decoration")
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn b_sequence_laws(p in path()) {
        let (order, b) = p.b_sequence();
        prop_assert_eq!(b.iter().sum::<u32>(), p.dinv());
        if let Some(&b0) = b.first() {
            prop_assert_eq!(b0, 0);
        }
        let rows = order.positions();
        let a = p.area_seq();
        let mut by_pos = vec![0usize; rows.len()];
        for (row, &pos) in rows.iter().enumerate() {
            by_pos[pos] = row;
        }
        for i in 1..b.len() {
            if p.is_peak(by_pos[i]) {
                prop_assert!(b[i] > b[i - 1], "peak at reading position {} in {:?}", i, a);
            }
        }
    }

    #[test]
    fn rotation_roundtrip(dp in decorated()) {
        prop_assume!(!dp.path.is_empty());
        let (rot, info) = dp.rotate().unwrap();
        prop_assert_eq!(rot.path.len() + 1, dp.path.len());
        prop_assert_eq!(rot.unrotate(info).unwrap(), dp.clone());
        let (_, b) = dp.path.b_sequence();
        let (_, b_rot) = rot.path.b_sequence();
        prop_assert_eq!(&b_rot[..], &b[..b.len() - 1]);
    }

    #[test]
    fn decorated_statistics_are_bounded(dp in decorated()) {
        let s = dp.stats();
        prop_assert!(s.area_circ <= s.area && s.dinv_circ <= s.dinv);
        prop_assert_eq!((s.peak_circ + s.rise_circ) as usize, dp.decorated_rows().len());
        prop_assert_eq!(dp.rise_touch_composition().size() + s.rise_circ as usize, dp.path.len());
    }

    #[test]
    fn text_roundtrip(p in path()) {
        prop_assert_eq!(DyckPath::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn multipoly_json_roundtrip(terms in prop::collection::vec(([0u32..4, 0u32..4, 0u32..3, 0u32..3], -5i64..6), 0..6)) {
        let mut p = MultiPoly::zero();
        for (e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        let text = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(serde_json::from_str::<MultiPoly>(&text).unwrap(), p);
    }
}

#[test]
fn rejects_invalid_inputs() {
    assert!(DyckPath::new(vec![1]).is_err());
    assert!(DyckPath::new(vec![0, 2]).is_err());
    let p = DyckPath::new(vec![0, 1, 2]).unwrap();
    assert!(DecoratedPath::new(p.clone(), &[2]).is_err());
    assert!(DecoratedPath::new(p, &[5]).is_err());
}

#[test]
fn decorated_counts() {
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430];
    for n in 1..=8 {
        let count: u64 = enumerate_paths(n).map(|p| enumerate_decorations(&p).count() as u64).sum();
        assert_eq!(count, catalan[n] << (n - 1));
    }
}

#[test]
fn multipoly_json_layout() {
    let mut p = MultiPoly::zero();
    p.add_term([1, 0, 0, 0], BigInt::from(1));
    p.add_term([0, 1, 1, 0], BigInt::from(3));
    let text = serde_json::to_string(&p).unwrap();
    assert_eq!(text, r#"{"vars":["q","t","z","w"],"terms":[[[1,0,0,0],"1"],[[0,1,1,0],"3"]]}"#);
}
