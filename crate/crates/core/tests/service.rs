use brickforge::service::{serve_listener, ServiceConfig};
use reqwest::{Client, StatusCode};
use serde_json::{json, Value};
use tokio::net::TcpListener;

struct Server {
    base: String,
    client: Client,
    _root: tempfile::TempDir,
}

impl Server {
    async fn start() -> Self {
        let root = tempfile::tempdir().unwrap();
        let listener = TcpListener::bind("127.0.0.1:0").await.unwrap();
        let base = format!("http://{}", listener.local_addr().unwrap());
        let config = ServiceConfig { root: root.path().to_path_buf(), ui_dir: None };
        tokio::spawn(serve_listener(listener, config));
        Server { base, client: Client::new(), _root: root }
    }

    async fn send(&self, method: &str, path: &str, body: Option<&str>) -> (StatusCode, Value) {
        let url = format!("{}{path}", self.base);
        let mut req = self.client.request(method.parse().unwrap(), url);
        if let Some(b) = body {
            req = req.header("content-type", "application/json").body(b.to_string());
        }
        let res = req.send().await.unwrap();
        let status = res.status();
        let text = res.text().await.unwrap();
        (status, serde_json::from_str(&text).unwrap_or(Value::String(text)))
    }

    async fn post(&self, path: &str, body: Value) -> (StatusCode, Value) {
        self.send("POST", path, Some(&body.to_string())).await
    }

    async fn get(&self, path: &str) -> (StatusCode, Value) {
        self.send("GET", path, None).await
    }

    async fn create(&self, name: &str) {
        let (status, _) = self.post("/projects", json!({ "name": name })).await;
        assert_eq!(status, StatusCode::CREATED);
    }
}

#[tokio::test]
async fn error_statuses() {
    let s = Server::start().await;
    let (status, body) = s.get("/projects/ghost").await;
    assert_eq!((status, body["code"].as_str()), (StatusCode::NOT_FOUND, Some("NotFound")));

    s.create("p").await;
    let (status, body) = s.post("/projects", json!({ "name": "p" })).await;
    assert_eq!((status, body["code"].as_str()), (StatusCode::CONFLICT, Some("AlreadyExists")));
    let (status, body) = s.post("/projects", json!({ "name": "../up" })).await;
    assert_eq!((status, body["code"].as_str()), (StatusCode::BAD_REQUEST, Some("InvalidName")));

    let (status, body) = s.post("/projects/p/design", json!({})).await;
    assert_eq!((status, body["code"].as_str()), (StatusCode::UNPROCESSABLE_ENTITY, Some("EmptySelection")));

    let (status, body) = s.get("/projects/p/export/png").await;
    assert_eq!((status, body["code"].as_str()), (StatusCode::BAD_REQUEST, Some("UnknownFormat")));
    let (status, _) = s.post("/projects/p/toggle", json!({ "cell": [64, 0] })).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn malformed_bodies_are_client_errors() {
    let s = Server::start().await;
    s.create("p").await;
    let bodies = [
        "{",
        "[]",
        "null",
        "42",
        "\"x\"",
        "{\"cell\": [1]}",
        "{\"cell\": [-1, 0]}",
        "{\"cell\": [1, 1], \"segment\": [0, 0, 1, 0]}",
        "{\"segment\": [0, 0, 1, 1]}",
        "{\"height\": \"3\", \"width\": 7}",
        "{\"height\": -1, \"width\": 7}",
        "{\"height\": 1e400, \"width\": 7}",
        "{\"type\": \"round\"}",
        "{\"type\": \"free\", \"rows\": 0}",
        "{\"p0\": [0, 0]}",
        "{\"p0\": [0, 0], \"p1\": [1, 1], \"mode\": \"erase\"}",
        "{\"seed\": -3}",
        "{\"name\": 5}",
        "{\"unknown\": true}",
        "\u{0}\u{1}",
    ];
    let paths = [
        ("POST", "/projects"),
        ("PUT", "/projects/p/dims"),
        ("PUT", "/projects/p/canvas"),
        ("POST", "/projects/p/strokes"),
        ("POST", "/projects/p/toggle"),
        ("POST", "/projects/p/design"),
    ];
    for (method, path) in paths {
        for b in bodies {
            let (status, body) = s.send(method, path, Some(b)).await;
            assert!(status.is_client_error(), "{method} {path} {b:?} gave {status}");
            assert!(body["code"].is_string(), "{body}");
        }
    }
    let (status, body) = s.get("/projects/p").await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body["selection"], json!([]));
}

#[tokio::test]
async fn design_is_repeatable_and_seed_can_be_overridden() {
    let s = Server::start().await;
    s.create("d").await;
    s.post("/projects/d/strokes", json!({ "p0": [0, 0], "p1": [0, 5] })).await;
    s.post("/projects/d/strokes", json!({ "p0": [1, 0], "p1": [1, 5] })).await;
    let (status, a) = s.post("/projects/d/design", json!({})).await;
    assert_eq!(status, StatusCode::OK);
    let (_, b) = s.send("POST", "/projects/d/design", None).await;
    assert_eq!(a, b);
    assert_eq!(a["seed"], 1);
    assert_eq!(a["strand_count"], 12);
    assert_eq!(a["strands"].as_array().unwrap().len(), 12);
    assert_eq!(a["shape_hash"].as_str().unwrap().len(), 12);

    let (_, c) = s.post("/projects/d/design", json!({ "seed": 99 })).await;
    assert_eq!(c["seed"], 99);
    assert_eq!(c["shape_hash"], a["shape_hash"]);
    assert_ne!(c["strands"], a["strands"]);
    let (_, state) = s.get("/projects/d").await;
    assert_eq!(state["seed"], 1);
}

#[tokio::test]
async fn toggles_and_strokes() {
    let s = Server::start().await;
    s.create("t").await;
    for i in 0..6 {
        let (_, body) = s.post("/projects/t/toggle", json!({ "cell": [3, 3] })).await;
        assert_eq!(body["selected"], i % 2 == 0);
    }
    let (_, state) = s.get("/projects/t").await;
    assert_eq!(state["selection"], json!([]));

    let (_, body) = s.post("/projects/t/strokes", json!({ "p0": [0, 0], "p1": [2, 2] })).await;
    assert_eq!(body["selection"], json!([[0, 0], [1, 1], [2, 2]]));
    let (_, body) = s.post("/projects/t/strokes", json!({ "p0": [0, 0], "p1": [2, 2], "mode": "select" })).await;
    assert_eq!(body["changed"], false);
    let (_, body) = s.post("/projects/t/strokes", json!({ "p0": [1, 1], "p1": [1, 1], "mode": "deselect" })).await;
    assert_eq!(body["selection"], json!([[0, 0], [2, 2]]));
    let (_, body) = s.send("POST", "/projects/t/clear", None).await;
    assert_eq!((body["changed"].clone(), body["selection"].clone()), (json!(true), json!([])));
}

#[tokio::test]
async fn digitized_canvas() {
    let s = Server::start().await;
    s.create("g").await;
    let (status, state) =
        s.send("PUT", "/projects/g/canvas", Some(r#"{"type": "digitized", "rows": 8, "cols": 8}"#)).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!((state["canvas_type"].as_str(), state["rows"].as_u64()), (Some("digitized"), Some(8)));

    let (_, body) = s.post("/projects/g/strokes", json!({ "p0": [0, 0], "p1": [2, 1] })).await;
    assert_eq!(body["selection"].as_array().unwrap().len(), 3);
    let (_, body) = s.post("/projects/g/toggle", json!({ "segment": [5, 5, 5, 6] })).await;
    assert_eq!(body["selected"], true);
    let (_, body) = s.post("/projects/g/toggle", json!({ "cell": [0, 0] })).await;
    assert_eq!(body["code"], "WrongCanvasType");

    let (_, d) = s.post("/projects/g/design", json!({})).await;
    assert_eq!(d["canvas_type"], "digitized");
    assert_eq!(d["strand_count"], 4);
    assert!(d["strands"].as_array().unwrap().iter().all(|x| x["sequence"].as_str().unwrap().len() == 44));
    let (_, saved) = s.send("POST", "/projects/g/save", None).await;
    assert!(saved["files"].as_array().unwrap().iter().any(|f| f == "DigitizedDNAData_g.pdf"), "{saved}");
}

#[tokio::test]
async fn dirty_flags_track_unsaved_work() {
    let s = Server::start().await;
    s.create("f").await;
    let dirty = |v: &Value| (v["draw_dirty"].as_bool().unwrap(), v["brick_dirty"].as_bool().unwrap());
    let (_, v) = s.get("/projects/f/dirty").await;
    assert_eq!(dirty(&v), (false, false));
    s.post("/projects/f/toggle", json!({ "cell": [0, 0] })).await;
    let (_, v) = s.get("/projects/f/dirty").await;
    assert_eq!(dirty(&v), (true, false));
    // Undoing the edit does not make the canvas clean again.
    s.post("/projects/f/toggle", json!({ "cell": [0, 0] })).await;
    s.post("/projects/f/toggle", json!({ "cell": [0, 0] })).await;
    let (_, dims) = s.send("PUT", "/projects/f/dims", Some(r#"{"height": 3, "width": 7}"#)).await;
    assert_eq!(dims["adjusted"], false);
    let (_, v) = s.get("/projects/f/dirty").await;
    assert_eq!(dirty(&v), (true, true));

    let (status, saved) = s.send("POST", "/projects/f/save", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(saved["files"], json!(["DNAData_f.csv", "DetailedDNAData_f.csv", "FreeGridData_f.pdf"]));
    let (_, v) = s.get("/projects/f/dirty").await;
    assert_eq!(dirty(&v), (false, false));
}

#[tokio::test]
async fn exports_and_index() {
    let s = Server::start().await;
    s.create("e").await;
    s.post("/projects/e/toggle", json!({ "cell": [0, 0] })).await;
    for (format, media, name) in [
        ("dnadata", "text/csv", "DNAData_e.csv"),
        ("detailed", "text/csv", "DetailedDNAData_e.csv"),
        ("pdf", "application/pdf", "FreeGridData_e.pdf"),
        ("svg", "image/svg+xml", "Shape_e.svg"),
    ] {
        let res = s.client.get(format!("{}/projects/e/export/{format}", s.base)).send().await.unwrap();
        assert_eq!(res.status(), StatusCode::OK);
        assert_eq!(res.headers()["content-type"], media);
        let disposition = res.headers()["content-disposition"].to_str().unwrap().to_string();
        assert!(disposition.contains(name), "{disposition}");
        assert!(!res.bytes().await.unwrap().is_empty());
    }

    let res = s.client.get(format!("{}/", s.base)).send().await.unwrap();
    assert_eq!(res.status(), StatusCode::OK);
    assert!(res.headers()["content-type"].to_str().unwrap().starts_with("text/html"));
    assert!(res.text().await.unwrap().contains("<html"));
}

#[tokio::test]
async fn projects_persist_across_servers() {
    let root = tempfile::tempdir().unwrap();
    for round in 0..2 {
        let listener = TcpListener::bind("127.0.0.1:0").await.unwrap();
        let base = format!("http://{}", listener.local_addr().unwrap());
        let config = ServiceConfig { root: root.path().to_path_buf(), ui_dir: None };
        let server = tokio::spawn(serve_listener(listener, config));
        let client = Client::new();
        if round == 0 {
            client.post(format!("{base}/projects")).json(&json!({ "name": "keep" })).send().await.unwrap();
            client.post(format!("{base}/projects/keep/toggle")).json(&json!({ "cell": [2, 3] })).send().await.unwrap();
            client.post(format!("{base}/projects/keep/save")).send().await.unwrap();
        } else {
            let state: Value = client.get(format!("{base}/projects/keep")).send().await.unwrap().json().await.unwrap();
            assert_eq!(state["selection"], json!([[2, 3]]));
            assert_eq!(state["draw_dirty"], false);
        }
        server.abort();
    }
}
