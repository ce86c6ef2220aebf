#pragma once

#include <cstddef>
#include <memory>
#include <utility>

#include "reactor/engine.hpp"
#include "reactor/trace.hpp"

namespace reactor {

/// A reactor with its state type erased. States cross the erasure as
/// structured values (state_to_cell), which is how tables, the CLI and the
/// session protocol see them.
class AnyReactor {
 public:
  template <class S>
  AnyReactor(Reactor<S> r) : impl_(std::make_shared<const Model<S>>(std::move(r))) {}

  AnyReactor react(const Event& e) const { return impl_->react(e); }
  /// The current state as a table cell converted to JSON.
  Json value_json() const { return impl_->value_json(); }
  Cell value_cell() const { return impl_->value_cell(); }
  bool stopped() const { return impl_->stopped(); }
  bool tracing() const { return impl_->tracing(); }
  bool has_draw() const { return impl_->has_draw(); }
  Scene draw() const { return impl_->draw(); }
  Subscriptions subscriptions() const { return impl_->subscriptions(); }

  AnyReactor start_trace() const { return impl_->start_trace(); }
  AnyReactor stop_trace() const { return impl_->stop_trace(); }
  TraceTable trace_table() const { return impl_->trace_table(); }
  std::size_t trace_length() const { return impl_->trace_length(); }

  AnyReactor interact(Display& d) const { return impl_->interact(d); }
  TraceTable interact_trace(Display& d) const { return impl_->interact_trace(d); }
  TraceTable simulate_trace(std::size_t n) const { return impl_->simulate_trace(n); }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual AnyReactor react(const Event& e) const = 0;
    virtual Json value_json() const = 0;
    virtual Cell value_cell() const = 0;
    virtual bool stopped() const = 0;
    virtual bool tracing() const = 0;
    virtual bool has_draw() const = 0;
    virtual Scene draw() const = 0;
    virtual Subscriptions subscriptions() const = 0;
    virtual AnyReactor start_trace() const = 0;
    virtual AnyReactor stop_trace() const = 0;
    virtual TraceTable trace_table() const = 0;
    virtual std::size_t trace_length() const = 0;
    virtual AnyReactor interact(Display& d) const = 0;
    virtual TraceTable interact_trace(Display& d) const = 0;
    virtual TraceTable simulate_trace(std::size_t n) const = 0;
  };

  template <class S>
  struct Model final : Concept {
    explicit Model(Reactor<S> r) : r(std::move(r)) {}

    AnyReactor react(const Event& e) const override { return reactor::react(r, e); }
    Json value_json() const override { return cell_to_json(value_cell()); }
    Cell value_cell() const override { return state_to_cell(r.value()); }
    bool stopped() const override { return r.stopped(); }
    bool tracing() const override { return r.tracing(); }
    bool has_draw() const override { return static_cast<bool>(r.handlers().to_draw); }
    Scene draw() const override { return reactor::draw(r); }
    Subscriptions subscriptions() const override { return r.subscriptions(); }
    AnyReactor start_trace() const override { return reactor::start_trace(r); }
    AnyReactor stop_trace() const override { return reactor::stop_trace(r); }
    TraceTable trace_table() const override { return get_trace_as_table(r); }
    std::size_t trace_length() const override { return get_trace(r).size(); }
    AnyReactor interact(Display& d) const override { return reactor::interact(r, d); }
    TraceTable interact_trace(Display& d) const override {
      return reactor::interact_trace(r, d);
    }
    TraceTable simulate_trace(std::size_t n) const override {
      return reactor::simulate_trace(r, n);
    }

    Reactor<S> r;
  };

  std::shared_ptr<const Concept> impl_;
};

}  // namespace reactor
