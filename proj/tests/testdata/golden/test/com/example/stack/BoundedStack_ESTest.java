/*
 * This file was automatically generated by EvoSuite
 */

package com.example.stack;

import org.junit.Test;
import static org.junit.Assert.*;
import static org.evosuite.runtime.EvoAssertions.*;
import java.util.EmptyStackException;
import org.evosuite.runtime.EvoRunner;
import org.evosuite.runtime.EvoRunnerParameters;
import org.junit.runner.RunWith;

@RunWith(EvoRunner.class) @EvoRunnerParameters(mockJVMNonDeterminism = true, useVFS = true)
public class BoundedStack_ESTest extends BoundedStack_ESTest_scaffolding {

  @Test(timeout = 4000)
  public void test00()  throws Throwable  {
      BoundedStack<Integer> boundedStack0 = new BoundedStack<Integer>(3);
      Integer integer0 = new Integer(10);
      boundedStack0.push(integer0);
      Integer integer1 = boundedStack0.pop();
      assertEquals(10, (int)integer1);
  }

  @Test(timeout = 4000)
  public void test01()  throws Throwable  {
      BoundedStack<String> boundedStack0 = new BoundedStack<String>(2);
      String string0 = boundedStack0.push("a");
      assertEquals("a", string0);
      assertEquals(1, boundedStack0.size());
      assertFalse(boundedStack0.isFull());
  }

  @Test(timeout = 4000)
  public void test02()  throws Throwable  {
      BoundedStack<Object> boundedStack0 = new BoundedStack<Object>(0);
      // Undeclared exception!
      try { 
        boundedStack0.pop();
        fail("Expecting exception: EmptyStackException");
      
      } catch(EmptyStackException e) {
         //
         // no message in exception (getMessage() returned null)
         //
         verifyException("com.example.stack.BoundedStack", e);
      }
  }

  @Test(timeout = 4000)
  public void test03()  throws Throwable  {
      BoundedStack<Object> boundedStack0 = null;
      try {
        boundedStack0 = new BoundedStack<Object>((-1));
        fail("Expecting exception: IllegalArgumentException");
      
      } catch(IllegalArgumentException e) {
         //
         // capacity < 0
         //
         verifyException("com.example.stack.BoundedStack", e);
      }
  }

  @Test(timeout = 4000)
  public void test04()  throws Throwable  {
      BoundedStack<Integer> boundedStack0 = new BoundedStack<Integer>(1);
      Integer integer0 = new Integer((-7));
      boundedStack0.push(integer0);
      // Undeclared exception!
      try { 
        boundedStack0.push(integer0);
        fail("Expecting exception: IllegalStateException");
      
      } catch(IllegalStateException e) {
         //
         // full
         //
         verifyException("com.example.stack.BoundedStack", e);
      }
  }

  @Test(timeout = 4000)
  public void test05()  throws Throwable  {
      BoundedStack<String> boundedStack0 = new BoundedStack<String>(4);
      String string0 = boundedStack0.peek();
      assertNull(string0);
  }

  @Test(timeout = 4000)
  public void test06()  throws Throwable  {
      BoundedStack<String> boundedStack0 = new BoundedStack<String>(4);
      boolean boolean0 = boundedStack0.isEmpty();
      assertTrue(boolean0);
      assertEquals(4, boundedStack0.capacity());
  }

  @Test(timeout = 4000)
  public void test07()  throws Throwable  {
      BoundedStack<String> boundedStack0 = new BoundedStack<String>(1);
      boundedStack0.push("x");
      boolean boolean0 = boundedStack0.isFull();
      assertTrue(boolean0);
      assertFalse(boundedStack0.isEmpty());
      assertEquals(1, boundedStack0.size());
      assertNotNull(boundedStack0.peek());
  }

  @Test(timeout = 4000)
  public void test08()  throws Throwable  {
      BoundedStack<Integer> boundedStack0 = new BoundedStack<Integer>(5);
      boundedStack0.push((Integer) null);
      boundedStack0.pop();
  }

  @Test(timeout = 4000)
  public void test09()  throws Throwable  {
      BoundedStack<Object> boundedStack0 = new BoundedStack<Object>(2);
      Object object0 = new Object();
      Object object1 = boundedStack0.push(object0);
      assertSame(object0, object1);
      Object object2 = boundedStack0.peek();
      assertSame(object1, object2);
  }

  @Test(timeout = 4000)
  public void test10()  throws Throwable  {
      BoundedStack<Object> boundedStack0 = new BoundedStack<Object>(2);
      Object object0 = new Object();
      boundedStack0.push(object0);
      Object object1 = new Object();
      Object object2 = boundedStack0.push(object1);
      assertNotSame(object0, object2);
  }

  @Test(timeout = 4000)
  public void test11()  throws Throwable  {
      BoundedStack<Integer> boundedStack0 = new BoundedStack<Integer>(3);
      int int0 = boundedStack0.size();
      assertEquals(0, int0);
      // Undeclared exception!
      try { 
        boundedStack0.pop();
        fail("Expecting exception: EmptyStackException");
      
      } catch(EmptyStackException e) {
         verifyException("com.example.stack.BoundedStack", e);
      }
  }

  @Test(timeout = 4000)
  public void test12()  throws Throwable  {
      BoundedStack<Integer> boundedStack0 = new BoundedStack<Integer>(3);
      int int0 = boundedStack0.capacity();
  }
}
