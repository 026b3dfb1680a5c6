import { ApiClient } from "./api.js";
import { initApp } from "./app.js";

const root = document.getElementById("app");
if (!root) throw new Error("missing #app mount point");

// same-origin by default; override with ?api=http://host:port
const override = new URLSearchParams(window.location.search).get("api");
initApp(root, new ApiClient(override ?? ""));
