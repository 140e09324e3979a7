/** Tiny DOM construction helper — enough to skip a framework. */

type Child = Node | string | null | undefined;

export function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | boolean | EventListener> = {},
  ...children: Child[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (typeof value === 'function') {
      node.addEventListener(key.replace(/^on/, ''), value);
    } else if (typeof value === 'boolean') {
      if (value) node.setAttribute(key, '');
      (node as unknown as Record<string, unknown>)[key] = value;
    } else if (key === 'class') {
      node.className = value;
    } else {
      node.setAttribute(key, value);
    }
  }
  for (const child of children) {
    if (child === null || child === undefined) continue;
    node.append(child);
  }
  return node;
}

export function clear(node: HTMLElement): void {
  node.replaceChildren();
}

/** Non-blocking error banner with an optional retry action. */
export function errorBanner(message: string, onRetry?: () => void): HTMLElement {
  const banner = el('div', { class: 'banner banner-error', role: 'alert' }, message);
  if (onRetry) {
    banner.append(' ', el('button', { class: 'retry', onclick: () => onRetry() }, 'Retry'));
  }
  return banner;
}
