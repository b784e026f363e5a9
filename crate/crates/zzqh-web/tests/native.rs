use zzqh_web::{cartan_impl, quiver_svg_impl, resolution_impl};

#[test]
fn svg_has_every_vertex_and_arrow() {
    let svg = quiver_svg_impl(2, 2).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 6);
    assert_eq!(svg.matches("<line").count(), 9);
    assert!(svg.contains(">2,0,0<"));
}

#[test]
fn oversized_quivers_refused() {
    assert!(quiver_svg_impl(3, 9).is_err());
    assert!(quiver_svg_impl(0, 2).is_err());
}

#[test]
fn line_cover_cartan() {
    let v: serde_json::Value = serde_json::from_str(&cartan_impl("cover", 1, 2).unwrap()).unwrap();
    assert_eq!(v["dim"], 9);
    assert_eq!(v["vertices"], serde_json::json!(["(0,2)", "(1,1)", "(2,0)"]));
    assert_eq!(v["cartan"], serde_json::json!([["1", "1", "0"], ["1", "2", "1"], ["0", "1", "2"]]));
}

#[test]
fn infinite_algebra_reported() {
    assert!(cartan_impl("zigzag", 1, 2).is_err());
}

#[test]
fn simple_resolution_shape() {
    let v: serde_json::Value = serde_json::from_str(&resolution_impl("cover", 1, 2, "simple", "0,2").unwrap()).unwrap();
    assert_eq!(v["length"], 4);
    assert_eq!(v["linear_length"], true);
    let sizes: Vec<usize> = v["terms"].as_array().unwrap().iter().map(|t| t.as_array().unwrap().len()).collect();
    assert_eq!(sizes, vec![1, 1, 2, 1, 1]);
}

#[test]
fn bad_module_arguments() {
    assert!(resolution_impl("cover", 1, 2, "simple", "9,9").is_err());
    assert!(resolution_impl("cover", 1, 2, "tilting", "0,2").is_err());
    assert!(resolution_impl("fixture:counterexample", 1, 2, "standard", "1").is_err());
}
