/** Client-side API key handling. The key lives in localStorage only, is
 * attached to requests as `api_key`, and is never rendered back into the
 * page. */

export interface KeyStore {
  getItem(name: string): string | null;
  setItem(name: string, value: string): void;
  removeItem(name: string): void;
}

export const KEY_STORAGE_NAME = "writegate_api_key";

export function saveKey(key: string, store: KeyStore): void {
  const trimmed = key.trim();
  if (trimmed) store.setItem(KEY_STORAGE_NAME, trimmed);
}

export function loadKey(store: KeyStore): string | null {
  return store.getItem(KEY_STORAGE_NAME);
}

export function clearKey(store: KeyStore): void {
  store.removeItem(KEY_STORAGE_NAME);
}

export function hasKey(store: KeyStore): boolean {
  return !!loadKey(store);
}
