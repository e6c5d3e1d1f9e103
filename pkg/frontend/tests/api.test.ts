import { afterEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { ApiError } from "../src/types.js";
import { diagnosisPayload, stubFetch } from "./helpers.js";

afterEach(() => {
  vi.unstubAllGlobals();
});

describe("ApiClient.submitReading", () => {
  it("posts the reading as JSON and returns the diagnosis", async () => {
    const calls = stubFetch(() => ({ status: 201, body: diagnosisPayload() }));
    const client = new ApiClient("http://api.test");
    const submission = {
      animal_id: 12,
      date: "2020-10-29",
      teats: [35.5, 35.6, 35.4, 35.6] as [number, number, number, number],
      cup_test: false,
    };

    const diagnosis = await client.submitReading(submission);

    expect(calls).toHaveLength(1);
    expect(calls[0]).toMatchObject({
      url: "http://api.test/api/v1/readings",
      method: "POST",
      body: submission,
    });
    expect(diagnosis.status_worst_teat).toBe("Attention");
  });

  it("turns a 400 into an ApiError carrying the field errors", async () => {
    stubFetch(() => ({
      status: 400,
      body: { errors: [{ field: "body.teats", message: "out of range" }] },
    }));
    const client = new ApiClient();

    const attempt = client.submitReading({
      animal_id: 1,
      date: "2020-10-29",
      teats: [31.0, 35.6, 35.4, 35.6],
      cup_test: false,
    });

    await expect(attempt).rejects.toSatisfy((error) => {
      const apiError = error as ApiError;
      return (
        apiError instanceof ApiError &&
        apiError.status === 400 &&
        apiError.errors.length === 1 &&
        apiError.errors[0]!.field === "body.teats"
      );
    });
  });
});

describe("ApiClient.lastReading", () => {
  it("resolves to null when the store is empty", async () => {
    stubFetch(() => ({ status: 404, body: { detail: "empty" } }));
    expect(await new ApiClient().lastReading()).toBeNull();
  });

  it("returns the newest diagnosis otherwise", async () => {
    const calls = stubFetch(() => ({
      status: 200,
      body: diagnosisPayload({ record_id: 9 }),
    }));
    const last = await new ApiClient().lastReading();
    expect(calls[0]!.url).toBe("/api/v1/readings/last");
    expect(last?.record_id).toBe(9);
  });
});

describe("ApiClient.animalHistory", () => {
  it("hits the animal route, with the window when given", async () => {
    const calls = stubFetch(() => ({ status: 200, body: [] }));
    const client = new ApiClient();

    await client.animalHistory(7);
    await client.animalHistory(7, { from: "2020-10-28", to: "2020-10-31" });

    expect(calls[0]!.url).toBe("/api/v1/animals/7/readings");
    expect(calls[1]!.url).toBe(
      "/api/v1/animals/7/readings?from=2020-10-28&to=2020-10-31",
    );
  });
});
