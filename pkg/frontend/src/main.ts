/** Browser entry point: same-origin API. */

import { initApp } from "./app.js";

void initApp(document);
