fn main() {
    use cohadj::monad::{FinCategory, FinMonad};
    let id2 = FinMonad::identity(FinCategory::chain(2));
    let c2 = FinMonad::closure_on_poset(FinCategory::chain(2), &[1, 1]);
    let c3 = FinMonad::closure_on_poset(FinCategory::chain(3), &[1, 1, 2]);
    for (name, m) in [("identity2", id2), ("closure2", c2), ("closure3", c3)] {
        let text = serde_json::to_string_pretty(&m.to_data()).unwrap();
        std::fs::write(format!("schemas/samples/{name}.json"), text + "\n").unwrap();
    }
    // a functor sample: the inclusion of the chain 2 into the chain 3
    let two = FinCategory::chain(2);
    let three = FinCategory::chain(3);
    let file = serde_json::json!({
        "source": serde_json::to_value(two.to_data()).unwrap(),
        "target": serde_json::to_value(three.to_data()).unwrap(),
        "objMap": {"0": "0", "1": "1"},
        "morMap": {"0<=0": "0<=0", "0<=1": "0<=1", "1<=1": "1<=1"},
    });
    std::fs::write(
        "schemas/samples/inclusion_functor.json",
        serde_json::to_string_pretty(&file).unwrap() + "\n",
    )
    .unwrap();
}
