#include "folia/render.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <vector>

namespace folia {

namespace {

constexpr double kStripH = 24;
constexpr double kVGap = 20;
constexpr double kHGap = 8;
constexpr double kMinStripW = 48;
constexpr double kTickW = 14;
constexpr double kMarkW = 18;
constexpr double kMargin = 12;

struct LayoutNode;

struct Band {
  enum Kind { Child, EmptyTick, Ellipsis } kind = EmptyTick;
  std::unique_ptr<LayoutNode> child;
  double width = 0;
  double x = 0;  // filled in during placement
};

struct LayoutNode {
  double width = 0;
  std::vector<Band> bands;
  bool cut = false;  // children exist but lie below the depth limit
  double x = 0;
  int level = 1;
};

Band child_band(std::unique_ptr<LayoutNode> node) {
  Band b;
  b.kind = Band::Child;
  b.width = node->width;
  b.child = std::move(node);
  return b;
}

Band tick_band() { return Band{Band::EmptyTick, nullptr, kTickW, 0}; }
Band mark_band() { return Band{Band::Ellipsis, nullptr, kMarkW, 0}; }

std::unique_ptr<LayoutNode> measure(const TreePtr& t, const RenderConfig& cfg, int depth_left);

void push_slot(std::vector<Band>& bands, const TreePtr& slot, const RenderConfig& cfg,
               int depth_left) {
  if (slot)
    bands.push_back(child_band(measure(slot, cfg, depth_left)));
  else
    bands.push_back(tick_band());
}

std::unique_ptr<LayoutNode> measure(const TreePtr& t, const RenderConfig& cfg, int depth_left) {
  auto node = std::make_unique<LayoutNode>();
  if (depth_left <= 1) {
    bool has_children = false;
    for_each_slot(t->children, [&](const TreePtr& s) { has_children = has_children || s != nullptr; });
    node->cut = has_children;
    node->width = kMinStripW;
    return node;
  }
  std::vector<Band>& bands = node->bands;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, FinPat<TreePtr>>) {
          for (const TreePtr& s : p.slots) push_slot(bands, s, cfg, depth_left - 1);
        } else if constexpr (std::is_same_v<T, NatPat<TreePtr>>) {
          for (const TreePtr& s : p.prefix) push_slot(bands, s, cfg, depth_left - 1);
          for (int i = 0; i < cfg.repeat; ++i)
            push_slot(bands, p.cycle[static_cast<std::size_t>(i) % p.cycle.size()], cfg,
                      depth_left - 1);
          bands.push_back(mark_band());
        } else if constexpr (std::is_same_v<T, NegPat<TreePtr>>) {
          bands.push_back(mark_band());
          // Index -i sits i intervals left of the origin, so the drawn order
          // runs from the deepest cycle instance back to index -1.
          for (int i = cfg.repeat - 1; i >= 0; --i)
            push_slot(bands, p.cycle[static_cast<std::size_t>(i) % p.cycle.size()], cfg,
                      depth_left - 1);
          for (auto it = p.prefix.rbegin(); it != p.prefix.rend(); ++it)
            push_slot(bands, *it, cfg, depth_left - 1);
        } else if constexpr (std::is_same_v<T, IntCycPat<TreePtr>>) {
          bands.push_back(mark_band());
          for (int i = 0; i < cfg.repeat; ++i)
            push_slot(bands, p.cycle[static_cast<std::size_t>(i) % p.cycle.size()], cfg,
                      depth_left - 1);
          bands.push_back(mark_band());
        } else {
          bands.push_back(mark_band());
          for (std::size_t i = 0; i < p.entries.size(); ++i) {
            if (i > 0 && p.entries[i].first != p.entries[i - 1].first + 1)
              bands.push_back(mark_band());
            push_slot(bands, p.entries[i].second, cfg, depth_left - 1);
          }
          bands.push_back(mark_band());
        }
      },
      t->children);
  double content = kHGap;
  for (const Band& b : bands) content += b.width + kHGap;
  node->width = std::max(kMinStripW, content);
  return node;
}

void place(LayoutNode& node, double x, int level, int& max_level, int& count) {
  node.x = x;
  node.level = level;
  max_level = std::max(max_level, level);
  ++count;
  double cursor = x + kHGap;
  double slack = node.width - kHGap;
  for (const Band& b : node.bands) slack -= b.width + kHGap;
  cursor += std::max(0.0, slack / 2);  // center narrow content
  for (Band& b : node.bands) {
    b.x = cursor;
    if (b.kind == Band::Child) place(*b.child, cursor, level + 1, max_level, count);
    cursor += b.width + kHGap;
  }
}

std::string fmt(double v) {
  std::ostringstream os;
  os << static_cast<long long>(v * 10 + (v >= 0 ? 0.5 : -0.5)) / 10.0;
  return os.str();
}

void emit(const LayoutNode& node, double base_y, std::ostringstream& os) {
  const double y = base_y - node.level * (kStripH + kVGap);
  os << "  <rect class=\"strip\" x=\"" << fmt(node.x) << "\" y=\"" << fmt(y) << "\" width=\""
     << fmt(node.width) << "\" height=\"" << fmt(kStripH) << "\"/>\n";
  if (node.cut) {
    os << "  <text class=\"mark\" x=\"" << fmt(node.x + node.width / 2) << "\" y=\""
       << fmt(y - kVGap / 2) << "\">&#8942;</text>\n";
  }
  for (const Band& b : node.bands) {
    const double cx = b.x + b.width / 2;
    switch (b.kind) {
      case Band::Child: {
        // Boundary interval on the parent's top edge plus the glued child's
        // lower edge, joined across the gap.
        os << "  <line class=\"glue\" x1=\"" << fmt(b.x) << "\" y1=\"" << fmt(y) << "\" x2=\""
           << fmt(b.x + b.width) << "\" y2=\"" << fmt(y) << "\"/>\n";
        os << "  <line class=\"drop\" x1=\"" << fmt(cx) << "\" y1=\"" << fmt(y) << "\" x2=\""
           << fmt(cx) << "\" y2=\"" << fmt(y - kVGap) << "\"/>\n";
        emit(*b.child, base_y, os);
        break;
      }
      case Band::EmptyTick:
        os << "  <line class=\"free\" x1=\"" << fmt(b.x) << "\" y1=\"" << fmt(y) << "\" x2=\""
           << fmt(b.x + b.width) << "\" y2=\"" << fmt(y) << "\"/>\n";
        break;
      case Band::Ellipsis:
        os << "  <text class=\"mark\" x=\"" << fmt(cx) << "\" y=\"" << fmt(y - 4)
           << "\">&#8943;</text>\n";
        break;
    }
  }
}

}  // namespace

std::string render_svg(const TreePtr& tree, const RenderConfig& cfg) {
  std::unique_ptr<LayoutNode> root = measure(tree, cfg, cfg.depth);
  int max_level = 1;
  int count = 0;
  place(*root, kMargin, 1, max_level, count);
  const double width = root->width + 2 * kMargin;
  const double height = max_level * (kStripH + kVGap) + 2 * kMargin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(width)
     << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << ' ' << fmt(height)
     << "\">\n";
  os << "  <style>\n"
        "    .strip { fill: #dce8f5; stroke: #2c5d8f; stroke-width: 1; }\n"
        "    .glue  { stroke: #b03a2e; stroke-width: 3; }\n"
        "    .drop  { stroke: #b03a2e; stroke-width: 1; stroke-dasharray: 2 2; }\n"
        "    .free  { stroke: #2c5d8f; stroke-width: 3; }\n"
        "    .mark  { font: 12px sans-serif; fill: #555; text-anchor: middle; }\n"
        "  </style>\n";
  emit(*root, height - kMargin + kVGap, os);
  os << "</svg>\n";
  return os.str();
}

int rendered_vertex_count(const TreePtr& tree, const RenderConfig& cfg) {
  std::unique_ptr<LayoutNode> root = measure(tree, cfg, cfg.depth);
  int max_level = 1;
  int count = 0;
  place(*root, kMargin, 1, max_level, count);
  return count;
}

}  // namespace folia
