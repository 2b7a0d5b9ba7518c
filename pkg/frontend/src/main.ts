import { ApiClient } from "./api.js";
import { startApp } from "./app.js";
import { FIXTURE_RECORDS } from "./fixture_data.js";
import { createMockService } from "./mock.js";

// Entry point for the browser build. With ?mock=1 the console runs against an
// in-memory copy of the fixture corpus instead of a live service, which is
// how the screens are developed offline.

const params = new URLSearchParams(window.location.search);
const useMock = params.get("mock") === "1";
const baseUrl = params.get("api") ?? "";
const token = params.get("token") ?? undefined;

const client = useMock
  ? new ApiClient({ fetchFn: createMockService(FIXTURE_RECORDS).fetchFn })
  : new ApiClient(token === undefined ? { baseUrl } : { baseUrl, token });

const root = document.getElementById("app");
if (root === null) throw new Error("missing #app element");
startApp(root, client);
