//! Starts the HTTP service on an ephemeral port and drives one project.
//!
//! Run with `cargo run --example serve`. Pass `--forever` to keep serving.

use brickforge::service::{serve_listener, ServiceConfig};
use tokio::io::{AsyncReadExt, AsyncWriteExt};
use tokio::net::{TcpListener, TcpStream};

async fn request(addr: std::net::SocketAddr, method: &str, path: &str, body: &str) -> std::io::Result<String> {
    let mut stream = TcpStream::connect(addr).await?;
    let head = format!(
        "{method} {path} HTTP/1.1\r\nhost: {addr}\r\ncontent-type: application/json\r\ncontent-length: {}\r\nconnection: close\r\n\r\n",
        body.len()
    );
    stream.write_all(head.as_bytes()).await?;
    stream.write_all(body.as_bytes()).await?;
    let mut out = String::new();
    stream.read_to_string(&mut out).await?;
    let status = out.lines().next().unwrap_or_default().to_string();
    let payload = out.split_once("\r\n\r\n").map(|(_, b)| b).unwrap_or_default();
    let preview: String = payload.chars().take(160).collect();
    Ok(format!("{status}  {preview}"))
}

#[tokio::main]
async fn main() -> std::io::Result<()> {
    let forever = std::env::args().any(|a| a == "--forever");
    let root = std::env::temp_dir().join(format!("brickforge-serve-{}", std::process::id()));
    std::fs::create_dir_all(&root)?;
    let listener = TcpListener::bind("127.0.0.1:0").await?;
    let addr = listener.local_addr()?;
    println!("serving {} on http://{addr}/", root.display());
    let server = tokio::spawn(serve_listener(listener, ServiceConfig { root, ui_dir: None }));

    let steps = [
        ("POST", "/projects", r#"{"name": "demo"}"#),
        ("PUT", "/projects/demo/dims", r#"{"height": 2.9, "width": 7.2}"#),
        ("POST", "/projects/demo/strokes", r#"{"p0": [0, 0], "p1": [0, 4]}"#),
        ("POST", "/projects/demo/toggle", r#"{"cell": [1, 2]}"#),
        ("GET", "/projects/demo/dirty", ""),
        ("POST", "/projects/demo/design", r#"{"seed": 3}"#),
        ("POST", "/projects/demo/save", ""),
        ("GET", "/projects/demo/export/svg", ""),
    ];
    for (method, path, body) in steps {
        println!("{method} {path}\n  {}", request(addr, method, path, body).await?);
    }

    if forever {
        server.await.map_err(std::io::Error::other)??;
    }
    Ok(())
}
