// Copyright 2026 The APCA Project Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef APCA_LANG_AST_H_
#define APCA_LANG_AST_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace apca {
namespace lang {

// Parse tree for the subset language. One method declaration per file.
//
// Child layout conventions (fixed arity; kEmpty fills absent slots):
//   kMethod:     params..., body block          (name, type = return type)
//   kParam:      -                              (name, type)
//   kBlock:      statements...
//   kVarDecl:    declarators...                 (type)
//   kDeclarator: init expr | nothing            (name)
//   kExprStmt:   expr (kIncDec only)
//   kAssign:     rhs                            (name = target, assign_op)
//   kIf:         cond, then block, else block-or-kEmpty
//   kWhile:      cond, body block
//   kFor:        init stmt-or-kEmpty, cond expr-or-kEmpty,
//                update stmt-or-kEmpty, body block
//   kSwitch:     scrutinee, cases...
//   kCase:       statements...                  (flag = is_default, int_value = label)
//   kReturn:     expr-or-kEmpty
//   kBreak, kContinue, kEmpty: -
//   kUnary:      operand                        (un_op)
//   kIncDec:     -                              (name, incdec_op, flag = prefix)
//   kBinary:     lhs, rhs                       (bin_op)
//   kTernary:    cond, then expr, else expr
//   kEqualsCall: receiver, argument
//   kIntLit (int_value), kBoolLit (bool_value), kStrLit (str_value), kVarRef (name): -
enum class NodeKind {
  kMethod,
  kParam,
  kBlock,
  kVarDecl,
  kDeclarator,
  kExprStmt,
  kAssign,
  kIf,
  kWhile,
  kFor,
  kSwitch,
  kCase,
  kBreak,
  kContinue,
  kReturn,
  kEmpty,
  kIntLit,
  kBoolLit,
  kStrLit,
  kVarRef,
  kUnary,
  kIncDec,
  kBinary,
  kTernary,
  kEqualsCall,
};

enum class TypeName { kInt, kBoolean, kString, kVoid };

enum class BinaryOp {
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAnd,
  kOr,
};

enum class UnaryOp { kNeg, kNot };
enum class AssignOp { kSet, kAddSet, kSubSet };
enum class IncDecOp { kInc, kDec };

struct Node {
  NodeKind kind = NodeKind::kEmpty;
  std::string name;
  TypeName type = TypeName::kInt;
  long long int_value = 0;
  bool bool_value = false;
  std::string str_value;
  BinaryOp bin_op = BinaryOp::kAdd;
  UnaryOp un_op = UnaryOp::kNeg;
  AssignOp assign_op = AssignOp::kSet;
  IncDecOp incdec_op = IncDecOp::kInc;
  bool flag = false;
  int line = 0;
  int col = 0;
  std::vector<std::unique_ptr<Node>> children;

  Node() = default;
  explicit Node(NodeKind k) : kind(k) {}

  Node* Child(size_t i) { return children[i].get(); }
  const Node* Child(size_t i) const { return children[i].get(); }
  size_t NumChildren() const { return children.size(); }
  void Add(std::unique_ptr<Node> child) { children.push_back(std::move(child)); }
};

std::unique_ptr<Node> CloneNode(const Node& node);

// Structural equality; source positions are ignored.
bool StructurallyEqual(const Node& a, const Node& b);

struct Ast {
  std::unique_ptr<Node> root;  // kMethod

  Ast() = default;
  explicit Ast(std::unique_ptr<Node> r) : root(std::move(r)) {}
  Ast(Ast&&) = default;
  Ast& operator=(Ast&&) = default;

  Ast Clone() const { return Ast(CloneNode(*root)); }
};

inline bool StructurallyEqual(const Ast& a, const Ast& b) {
  return StructurallyEqual(*a.root, *b.root);
}

// Addresses a node as the sequence of child indices from the root.
using NodePath = std::vector<int>;

// Returns nullptr when the path does not address a node.
const Node* NodeAtPath(const Ast& ast, const NodePath& path);
Node* NodeAtPath(Ast& ast, const NodePath& path);

// Pre-order traversal. The callback receives each node with its path.
void WalkPreOrder(const Node& root,
                  const std::function<void(const Node&, const NodePath&)>& fn);

// Runtime value domain: 64-bit two's-complement integers, booleans, strings.
using Value = std::variant<long long, bool, std::string>;

std::string ValueToString(const Value& v);

enum class RunStatus { kNormal, kRuntimeError, kStepBudgetExceeded };
enum class RuntimeErrorKind { kNone, kDivisionByZero };

struct ExecutionOutcome {
  RunStatus status = RunStatus::kNormal;
  RuntimeErrorKind error = RuntimeErrorKind::kNone;
  std::optional<Value> return_value;
  std::vector<Value> trace;

  bool operator==(const ExecutionOutcome& other) const {
    return status == other.status && error == other.error &&
           return_value == other.return_value && trace == other.trace;
  }
};

enum class CompileErrorKind { kSyntax, kResolve, kType };

// Raised by Parse for malformed, unresolved, or ill-typed input.
class CompileError : public std::runtime_error {
 public:
  CompileError(CompileErrorKind kind, int line, int col, std::string message)
      : std::runtime_error(FormatMessage(kind, line, col, message)),
        kind_(kind),
        line_(line),
        col_(col),
        detail_(std::move(message)) {}

  CompileErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int col() const { return col_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string FormatMessage(CompileErrorKind kind, int line, int col,
                                   const std::string& message);

  CompileErrorKind kind_;
  int line_;
  int col_;
  std::string detail_;
};

const char* TypeNameToString(TypeName t);

}  // namespace lang
}  // namespace apca

#endif  // APCA_LANG_AST_H_
