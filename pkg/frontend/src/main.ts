import { ApiClient } from "./api.js";
import { App } from "./app.js";

const DEFAULT_API = "http://127.0.0.1:8642";

function apiBase(): string {
  const fromQuery = new URLSearchParams(window.location.search).get("api");
  return fromQuery ?? DEFAULT_API;
}

const root = document.getElementById("app");
if (!root) throw new Error("missing #app element");
new App(root, new ApiClient(apiBase()));
