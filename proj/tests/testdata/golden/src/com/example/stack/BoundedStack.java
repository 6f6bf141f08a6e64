package com.example.stack;

import java.util.ArrayList;
import java.util.EmptyStackException;
import java.util.List;

/**
 * A stack with a fixed capacity.
 */
public class BoundedStack<T> {
  private final List<T> items = new ArrayList<>();
  private final int capacity;

  /**
   * Creates a stack.
   * @param capacity maximum number of elements
   * @throws IllegalArgumentException if capacity is negative
   */
  public BoundedStack(int capacity) {
    if (capacity < 0) {
      throw new IllegalArgumentException("capacity < 0");
    }
    this.capacity = capacity;
  }

  /**
   * Pushes an element.
   * @param item the element
   * @return the element pushed
   * @throws IllegalStateException if the stack is full
   */
  public T push(T item) {
    if (items.size() == capacity) {
      throw new IllegalStateException("full");
    }
    items.add(item);
    return item;
  }

  /**
   * Removes the top element.
   * @return the removed element
   * @throws EmptyStackException if the stack is empty
   */
  public T pop() {
    if (items.isEmpty()) {
      throw new EmptyStackException();
    }
    return items.remove(items.size() - 1);
  }

  /**
   * Returns the top element without removing it.
   * @return the top element, or null when empty
   */
  public T peek() {
    return items.isEmpty() ? null : items.get(items.size() - 1);
  }

  /** Number of elements. */
  public int size() {
    return items.size();
  }

  public boolean isEmpty() {
    return items.isEmpty();
  }

  /**
   * Whether no further element fits.
   * @return true when full
   */
  public boolean isFull() {
    return items.size() == capacity;
  }

  public int capacity() {
    return capacity;
  }
}
